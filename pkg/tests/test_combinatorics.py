import itertools
import math

import pytest

from klcanon.combinatorics import (
    Permutation, act, all_permutations, bruhat_leq, format_sequence, i0, inversions,
    longest_element, min_coset_reps, parabolic_context, parse_permutation, parse_sequence,
    reduced_word, subword_leq,
)
from klcanon.errors import IndexOutOfRange, LengthMismatch

s = lambda i, n: Permutation.simple(i, n)


def test_action_examples():
    assert act(s(1, 3), (2, 1, 1)) == (1, 2, 1)
    assert act(Permutation.identity(3), (3, 1, 2)) == (3, 1, 2)
    w = s(1, 3) * s(2, 3)
    assert act(w, (3, 2, 1)) == act(s(1, 3), act(s(2, 3), (3, 2, 1)))
    with pytest.raises(LengthMismatch):
        act(s(1, 3), (1, 2))


def test_action_is_a_group_action():
    seq = (3, 1, 2, 2)
    for x, y in itertools.product(all_permutations(4), repeat=2):
        assert (x * y).act(seq) == x.act(y.act(seq))


def test_inversions_examples():
    assert inversions((2, 1)) == 1
    assert inversions(i0((2, 2))) == 4
    assert inversions((1, 1, 2, 2)) == 0


def test_i0_examples():
    assert i0((2, 2)) == (2, 2, 1, 1)
    assert i0((1, 1, 1)) == (3, 2, 1)
    assert i0((0, 3)) == (2, 2, 2)


def test_min_coset_reps_examples():
    assert min_coset_reps(parabolic_context((1, 1))) == [Permutation.identity(2), s(1, 2)]
    reps = min_coset_reps(parabolic_context((2, 1)))
    assert [r.length for r in reps] == [0, 1, 2]
    assert len(min_coset_reps(parabolic_context((2, 2)))) == 6


@pytest.mark.parametrize("weight", [(2, 1), (2, 2), (1, 2, 1), (3, 1, 2)])
def test_min_coset_reps_are_coset_minima(weight):
    ctx = parabolic_context(weight)
    n = ctx.n
    stab = [w for w in all_permutations(n) if w.act(ctx.base) == ctx.base]
    assert len(ctx.reps) * len(stab) == math.factorial(n)
    for r in ctx.reps:
        assert all(r.length <= (r * w).length for w in stab)
        assert not set(r.right_descents()) & ctx.J


def test_bruhat_examples():
    e = Permutation.identity(3)
    assert all(bruhat_leq(e, w) for w in all_permutations(3))
    assert not bruhat_leq(s(1, 3), s(2, 3))
    assert bruhat_leq(s(1, 3), s(1, 3) * s(2, 3))
    with pytest.raises(LengthMismatch):
        bruhat_leq(e, Permutation.identity(2))


def test_bruhat_matches_subword_criterion_on_s4():
    perms = all_permutations(4)
    for y, w in itertools.product(perms, repeat=2):
        assert bruhat_leq(y, w) == subword_leq(y, w)


def test_bruhat_is_partial_order_refining_length():
    perms = all_permutations(4)
    for x, y in itertools.product(perms, repeat=2):
        if bruhat_leq(x, y):
            assert x.length <= y.length
            if bruhat_leq(y, x):
                assert x == y
        for z in perms:
            if bruhat_leq(x, y) and bruhat_leq(y, z):
                assert bruhat_leq(x, z)


def test_longest_element_examples():
    assert longest_element(parabolic_context((1, 1, 1))) == Permutation.identity(3)
    assert longest_element(parabolic_context((2,))) == s(1, 2)
    assert longest_element(parabolic_context((4,))) == Permutation((4, 3, 2, 1))
    w = longest_element(parabolic_context((2, 3)))
    assert w * w == Permutation.identity(5)


def test_reduced_word_examples():
    assert reduced_word(Permutation.identity(3)) == []
    assert reduced_word(s(2, 3)) == [2]
    assert reduced_word(Permutation((3, 2, 1))) == [1, 2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_reduced_words_are_reduced(n):
    for w in all_permutations(n):
        word = reduced_word(w)
        assert len(word) == w.length == inversions(w.images)
        assert Permutation.from_word(word, n) == w


@pytest.mark.parametrize("n", range(1, 9))
def test_length_equals_inversion_drop(n):
    for m1 in range(n + 1):
        for weight in [(m1, n - m1)] + ([(1, m1, n - m1 - 1)] if n - m1 >= 1 and n <= 7 else []):
            ctx = parabolic_context(weight)
            top = inversions(ctx.base)
            images = {sigma.act(ctx.base) for sigma in ctx.reps}
            assert len(images) == len(ctx.reps) == len(set(itertools.permutations(ctx.base)))
            for sigma in ctx.reps:
                assert sigma.length == top - inversions(sigma.act(ctx.base))


def test_simple_reflection_bounds():
    with pytest.raises(IndexOutOfRange):
        Permutation.simple(3, 3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_parsing_and_formatting():
    assert str(parse_permutation("2,1,3")) == "2,1,3"
    assert parse_sequence("+-−") == (1, 2, 2)
    assert parse_sequence("3,1,2", 3) == (3, 1, 2)
    assert format_sequence((1, 2, 2)) == "+--"
    assert format_sequence((3, 1, 2), 3) == "3,1,2"
    with pytest.raises(ValueError, match="x"):
        parse_sequence("1,x,2")
    with pytest.raises(ValueError):
        parse_sequence("1,4", 3)
