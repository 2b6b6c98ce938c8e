import itertools
import random

import pytest

from klcanon.errors import IndexOutOfRange
from klcanon.laurent import LaurentPoly, RationalFunction, quantum_integer as qi
from klcanon.sl2 import (
    apply_projectors, canonical_sl2, dual_canonical_sl2, insert_invariant, invariant_a,
    jones_wenzl, runs, to_word, valid_junctions,
)
from klcanon.tensor import ComultChoice, TensorVector, canonical_basis, dual_canonical_basis, generator_action, psi

v = LaurentPoly.v()
vi = LaurentPoly.monomial(-1)
BAR = ComultChoice.BARRED


def e(word):
    return TensorVector.basis(2, to_word(word))


def vec(terms):
    n = len(next(iter(terms)))
    return TensorVector(2, n, {to_word(w): LaurentPoly.coerce(c) for w, c in terms.items()})


def words(n):
    return ["".join(w) for w in itertools.product("+-", repeat=n)]


def test_invariant_a():
    a = invariant_a()
    assert a.coefficient(to_word("+-")) == 1
    assert a.coefficient(to_word("-+")) == -vi
    assert not generator_action("E", 1, BAR, a).coeffs
    assert psi(BAR, a) == a


def test_insert_invariant():
    empty = TensorVector(2, 0, {(): LaurentPoly.const(1)})
    assert insert_invariant(0, empty) == invariant_a()
    x = e("+-")
    want = vec({"++--": 1, "+-+-": -vi})
    assert insert_invariant(1, x) == want
    f = LaurentPoly({2: 3})
    assert insert_invariant(1, x.scale(f)) == insert_invariant(1, x).scale(f)
    with pytest.raises(IndexOutOfRange):
        insert_invariant(3, x)


def test_dual_examples():
    assert dual_canonical_sl2("-+") == e("-+")
    assert dual_canonical_sl2("+-") == invariant_a()
    want = vec({"++--": 1, "-+-+": -vi, "+-+-": -vi, "--++": vi ** 2})
    assert dual_canonical_sl2("++--") == want
    assert str(dual_canonical_sl2("++--")) == "e[++--] - v^-1 e[+-+-] - v^-1 e[-+-+] + v^-2 e[--++]"


def test_jones_wenzl_examples():
    p = jones_wenzl(1, 2, e("+-"))
    two = qi(2)
    assert p.coefficient(to_word("+-")) == RationalFunction(v, two)
    assert p.coefficient(to_word("-+")) == RationalFunction(1, two)
    assert not jones_wenzl(1, 2, e("+-") - e("-+").scale(v)).coeffs
    with pytest.raises(IndexOutOfRange):
        jones_wenzl(2, 3, e("+-"))


def test_jones_wenzl_idempotent():
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randint(2, 6)
        x = TensorVector(2, n, {tuple(rng.randint(1, 2) for _ in range(n)): LaurentPoly({rng.randint(-2, 2): 1})
                                for _ in range(3)})
        i = rng.randint(1, n)
        j = rng.randint(i, n)
        p = jones_wenzl(i, j, x)
        assert jones_wenzl(i, j, p) == p


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jones_wenzl_is_a_module_map(n):
    from klcanon.tensor import ComultChoice as C
    for w in words(n):
        x = e(w)
        for gen in "EFK":
            assert jones_wenzl(1, n, generator_action(gen, 1, C.STANDARD, x)) == \
                generator_action(gen, 1, C.STANDARD, jones_wenzl(1, n, x))


def test_canonical_examples():
    assert canonical_sl2("+-") == vec({"+-": 1, "-+": vi})
    assert canonical_sl2("+-") == apply_projectors([(1, 2)], "-+", qi(2))
    b = canonical_sl2("+-++-")
    assert b == apply_projectors([(1, 2), (2, 5)], "--+++", qi(2) * qi(4))
    assert all(isinstance(c, LaurentPoly) for c in b.coeffs.values())
    b = canonical_sl2("+-+-")
    assert b == apply_projectors([(1, 2), (2, 4)], "--++", qi(2) * qi(3))
    assert b == apply_projectors([(3, 4), (1, 3)], "--++", qi(2) * qi(3))


def test_runs_and_junctions():
    assert runs(to_word("+-++-")) == ([1, 2], [1, 1])
    assert valid_junctions(to_word("+-++-")) == [(0, 1, 1)]
    assert valid_junctions(to_word("+-+-")) == [(0, 1, 1), (2, 1, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_routes_agree(n):
    for w in words(n):
        assert canonical_sl2(w) == canonical_basis(2, to_word(w))
        assert dual_canonical_sl2(w) == dual_canonical_basis(2, to_word(w))


@pytest.mark.parametrize("n", range(2, 8))
def test_choice_independence(n):
    rng = random.Random(n)
    for w in words(n):
        assert canonical_sl2(w, lambda js: js[-1]) == canonical_sl2(w)
        assert canonical_sl2(w, rng.choice) == canonical_sl2(w)
        assert dual_canonical_sl2(w, max) == dual_canonical_sl2(w)
        assert dual_canonical_sl2(w, rng.choice) == dual_canonical_sl2(w)


@pytest.mark.parametrize("n", range(1, 9))
def test_dual_coefficients_are_signed_powers(n):
    for w in words(n):
        for c in dual_canonical_sl2(w).coeffs.values():
            assert c.is_monomial() and abs(c.terms[c.min_degree()]) == 1
