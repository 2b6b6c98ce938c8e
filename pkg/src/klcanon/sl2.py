"""
Explicit constructions for ``U_q(sl_2)``: the invariant ``a``, the dual
canonical basis by inserting ``a``, the Jones-Wenzl projectors, and the
canonical basis as projectors applied to ``e_{-...-+...+}``.

Words are tuples over ``{1, 2}`` with ``+`` = 1 and ``-`` = 2; the public
functions also accept ``"+-"`` strings.

>>> str(dual_canonical_sl2("++--"))
'e[++--] - v^-1 e[+-+-] - v^-1 e[-+-+] + v^-2 e[--++]'
>>> str(canonical_sl2("+-"))
'e[+-] + v^-1 e[-+]'
"""
from __future__ import annotations

import functools
from typing import Callable, Sequence, Union

from .combinatorics import inversions, parse_sequence, sequences_of_weight
from .errors import DenominatorError, IndexOutOfRange
from .laurent import LaurentPoly, RationalFunction, gauss_binomial, simplify
from .tensor import TensorVector

__all__ = [
    "PLUS", "MINUS", "to_word", "invariant_a", "insert_invariant", "dual_canonical_sl2",
    "jones_wenzl", "canonical_sl2", "runs", "valid_junctions", "apply_projectors",
]

PLUS, MINUS = 1, 2
Word = Union[str, Sequence[int]]
ONE = LaurentPoly.const(1)


def to_word(word: Word) -> tuple[int, ...]:
    if isinstance(word, str):
        seq = parse_sequence(word, 2)
    else:
        seq = tuple(word)
    if any(x not in (PLUS, MINUS) for x in seq):
        raise ValueError(f"{word!r} is not a word over +/-")
    return seq


def invariant_a() -> TensorVector:
    """``a = e_+ (x) e_- - v^-1 e_- (x) e_+``."""
    return TensorVector(2, 2, {(PLUS, MINUS): ONE, (MINUS, PLUS): LaurentPoly.monomial(-1, -1)})


def insert_invariant(i: int, x: TensorVector) -> TensorVector:
    """Insert ``a`` into slots ``i+1, i+2`` of every basis tensor of ``x``."""
    if not 0 <= i <= x.n:
        raise IndexOutOfRange(f"insertion slot {i} outside 0..{x.n}")
    a = invariant_a().coeffs
    out = {}
    for seq, c in x.coeffs.items():
        for pair, f in a.items():
            out[seq[:i] + pair + seq[i:]] = c * f
    return TensorVector(2, x.n + 2, out)


def _pad(x: TensorVector, lead: int, trail: int) -> TensorVector:
    """``e_-^{lead} (x) x (x) e_+^{trail}``."""
    if not lead and not trail:
        return x
    pre, post = (MINUS,) * lead, (PLUS,) * trail
    return TensorVector(2, x.n + lead + trail, {pre + s + post: c for s, c in x.coeffs.items()})


def _strip(word: tuple[int, ...]) -> tuple[int, tuple[int, ...], int]:
    lo, hi = 0, len(word)
    while lo < hi and word[lo] == MINUS:
        lo += 1
    while hi > lo and word[hi - 1] == PLUS:
        hi -= 1
    return lo, word[lo:hi], len(word) - hi


def _plus_minus_positions(word: tuple[int, ...]) -> list[int]:
    return [p for p in range(len(word) - 1) if word[p] == PLUS and word[p + 1] == MINUS]


def dual_canonical_sl2(word: Word, choose: Callable[[list[int]], int] | None = None) -> TensorVector:
    """
    Dual canonical basis vector ``b^I``: strip leading ``-`` and trailing
    ``+``, then delete an adjacent ``+-`` (the leftmost unless ``choose``
    picks another position), recurse, and insert ``a`` back in its place.
    """
    word = to_word(word)
    if choose is None:
        return _dual_cached(word)
    return _dual(word, choose)


@functools.lru_cache(maxsize=None)
def _dual_cached(word: tuple[int, ...]) -> TensorVector:
    return _dual(word, min, _dual_cached)


def _dual(word, choose, rec=None) -> TensorVector:
    rec = rec or (lambda w: _dual(w, choose))
    lead, core, trail = _strip(word)
    if not core:
        result = TensorVector(2, 0, {(): ONE})
    else:
        p = choose(_plus_minus_positions(core))
        result = insert_invariant(p, rec(core[:p] + core[p + 2:]))
    return _pad(result, lead, trail)


@functools.lru_cache(maxsize=None)
def _window_words(size: int, plus: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((w, inversions(w)) for w in sequences_of_weight((plus, size - plus)))


def jones_wenzl(i: int, j: int, x: TensorVector) -> TensorVector:
    """
    Apply the q-symmetrizer ``p_{j-i+1}`` to slots ``i..j`` (1-based, inclusive).

    >>> str(jones_wenzl(1, 2, TensorVector.basis(2, (1, 2))))
    '((v^2) / (v^2 + 1)) e[+-] + ((v) / (v^2 + 1)) e[-+]'
    """
    if not 1 <= i <= j <= x.n:
        raise IndexOutOfRange(f"window {i}..{j} outside 1..{x.n}")
    size = j - i + 1
    # seq -> {denominator: numerator}; one denominator per window weight
    groups: dict[tuple, dict[LaurentPoly, LaurentPoly]] = {}
    for seq, c in x.coeffs.items():
        window = seq[i - 1:j]
        plus = window.count(PLUS)
        base = plus * (size - plus) - inversions(window)
        binom = gauss_binomial(size, plus)
        if isinstance(c, RationalFunction):
            num, den = c.num, c.den * binom
        else:
            num, den = c, binom
        head, tail = seq[:i - 1], seq[j:]
        for w, inv in _window_words(size, plus):
            key = head + w + tail
            g = groups.setdefault(key, {})
            term = num.shift(base - inv)
            old = g.get(den)
            g[den] = term if old is None else old + term
    out = {}
    for key, g in groups.items():
        total = None
        for den, num in g.items():
            if not num:
                continue
            r = RationalFunction(num, den)
            total = r if total is None else total + r
        if total:
            out[key] = simplify(total)
    return TensorVector(x.k, x.n, out)


def runs(core: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """
    Plus-run lengths ``b_0..b_{m-1}`` and minus-run lengths ``a_1..a_m`` of a
    word starting with ``+`` and ending with ``-``.
    """
    bs, as_ = [], []
    p = 0
    while p < len(core):
        q = p
        while q < len(core) and core[q] == PLUS:
            q += 1
        r = q
        while r < len(core) and core[r] == MINUS:
            r += 1
        bs.append(q - p)
        as_.append(r - q)
        p = r
    return bs, as_


def valid_junctions(core: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """
    Junctions ``(start, k, l)`` where the block rule applies: a run of ``k``
    pluses at 0-based ``start`` followed by ``l`` minuses, preceded by nothing
    or at least ``k`` minuses, followed by nothing or at least ``l`` pluses.
    """
    bs, as_ = runs(core)
    m = len(bs)
    out = []
    start = 0
    for j in range(m):
        k, l = bs[j], as_[j]
        left_ok = j == 0 or as_[j - 1] >= k
        right_ok = j == m - 1 or bs[j + 1] >= l
        if left_ok and right_ok:
            out.append((start, k, l))
        start += k + l
    return out


def canonical_sl2(word: Word, choose: Callable[[list], tuple] | None = None) -> TensorVector:
    """
    Canonical basis vector ``b_I``: strip leading ``-`` and trailing ``+``,
    then at a valid junction ``+^k -^l`` swap the two runs, recurse, and apply
    ``[k+l choose l] p`` on the window the runs occupy.
    """
    word = to_word(word)
    if choose is None:
        return _canonical_cached(word)
    return _canonical(word, choose)


@functools.lru_cache(maxsize=None)
def _canonical_cached(word: tuple[int, ...]) -> TensorVector:
    return _canonical(word, min, _canonical_cached)


def _canonical(word, choose, rec=None) -> TensorVector:
    rec = rec or (lambda w: _canonical(w, choose))
    lead, core, trail = _strip(word)
    if not core:
        return _pad(TensorVector(2, 0, {(): ONE}), lead, trail)
    junctions = valid_junctions(core)
    if not junctions:
        raise AssertionError(f"no valid junction in {core}")
    start, k, l = choose(junctions)
    swapped = core[:start] + (MINUS,) * l + (PLUS,) * k + core[start + k + l:]
    inner = rec(swapped)
    projected = jones_wenzl(start + 1, start + k + l, inner).scale(gauss_binomial(k + l, l))
    if not projected.is_laurent():
        raise DenominatorError(f"b_{core} has non-Laurent coefficients")
    projected = TensorVector(2, projected.n, {s: simplify(c) for s, c in projected.coeffs.items()})
    return _pad(projected, lead, trail)


def apply_projectors(windows: Sequence[tuple[int, int]], word: Word, scalar=1) -> TensorVector:
    """
    ``scalar * p_{w_1} ... p_{w_r} e_word``, the rightmost window applied first.

    >>> from klcanon.laurent import quantum_integer as qi
    >>> apply_projectors([(1, 2)], "-+", qi(2)) == canonical_sl2("+-")
    True
    """
    x = TensorVector.basis(2, to_word(word))
    for i, j in reversed(list(windows)):
        x = jones_wenzl(i, j, x)
    return x.scale(scalar)
