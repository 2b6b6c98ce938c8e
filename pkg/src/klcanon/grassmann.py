"""
Coefficients ``c(I, J)`` of ``e_J`` in the canonical basis vector ``b_I`` of
``V^{(x)n}`` for ``U_q(sl_2)``, computed locally from run-length encodings
instead of expanding ``b_I``.

A word ``I`` starting with ``+`` and ending with ``-`` is encoded by run
lengths: ``b_0`` pluses, ``a_1`` minuses, ``b_1`` pluses, ..., ``a_m``
minuses.  Block ``j`` is the ``b_j`` pluses followed by the ``a_{j+1}``
minuses.  A word ``J`` controlled by ``I`` is ``x_j`` pluses followed by
minuses on each block.

>>> str(coefficient_c("+-", "-+"))
'v^-1'
>>> str(coefficient_c("++--", "--++"))
'v^-4'
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NotControlled, WeightMismatch
from .laurent import LaurentPoly, gauss_binomial
from .sl2 import MINUS, PLUS, Word, runs, to_word

__all__ = [
    "BlockEncoding", "RelativeEncoding", "CParams",
    "encode", "decode", "encode_relative", "decode_relative", "c_params",
    "normalize_pair", "is_controlled", "reduce_to_controlled", "select_junction",
    "coefficient_c", "coefficient_c0", "h_exponent", "recursion_terms", "recursion_check",
]

ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


@dataclass(frozen=True)
class BlockEncoding:
    """Plus-run lengths ``b = (b_0..b_{m-1})`` and minus-run lengths ``a = (a_1..a_m)``."""
    b: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.a):
            raise ValueError("b and a must have the same number of blocks")
        if any(x <= 0 for x in self.b + self.a):
            raise ValueError("run lengths must be positive")

    @property
    def m(self) -> int:
        return len(self.b)

    def block_sizes(self) -> list[int]:
        return [bj + aj for bj, aj in zip(self.b, self.a)]


@dataclass(frozen=True)
class RelativeEncoding:
    x: tuple[int, ...]


@dataclass(frozen=True)
class CParams:
    c: tuple[int, ...]


def _strip_word(word: tuple[int, ...]) -> tuple[int, ...]:
    lo, hi = 0, len(word)
    while lo < hi and word[lo] == MINUS:
        lo += 1
    while hi > lo and word[hi - 1] == PLUS:
        hi -= 1
    return word[lo:hi]


def encode(word: Word) -> BlockEncoding:
    """
    Run-length code of ``word`` after removing leading minuses and trailing pluses.

    >>> encode("+-+--")
    BlockEncoding(b=(1, 1), a=(1, 2))
    """
    core = _strip_word(to_word(word))
    bs, as_ = runs(core)
    return BlockEncoding(tuple(bs), tuple(as_))


def decode(enc: BlockEncoding) -> tuple[int, ...]:
    out: list[int] = []
    for bj, aj in zip(enc.b, enc.a):
        out += [PLUS] * bj + [MINUS] * aj
    return tuple(out)


def decode_relative(enc: BlockEncoding, rel: RelativeEncoding) -> tuple[int, ...]:
    if len(rel.x) != enc.m:
        raise ValueError("relative encoding has the wrong number of blocks")
    out: list[int] = []
    for size, xj in zip(enc.block_sizes(), rel.x):
        if not 0 <= xj <= size:
            raise ValueError(f"block count {xj} outside 0..{size}")
        out += [PLUS] * xj + [MINUS] * (size - xj)
    return tuple(out)


def encode_relative(enc: BlockEncoding, word: Word) -> RelativeEncoding:
    """Encode a word controlled by ``decode(enc)`` as per-block plus counts."""
    word = to_word(word)
    xs = []
    p = 0
    for size in enc.block_sizes():
        block = word[p:p + size]
        xj = block.count(PLUS)
        if block != (PLUS,) * xj + (MINUS,) * (size - xj):
            raise NotControlled(f"{word} is not controlled by {decode(enc)}")
        xs.append(xj)
        p += size
    if p != len(word):
        raise WeightMismatch("word length does not match the encoding")
    return RelativeEncoding(tuple(xs))


def c_params(enc: BlockEncoding, rel: RelativeEncoding) -> CParams:
    """``c_0 = x_0`` and ``c_{j+1} = c_j + b_j - x_j`` for ``j = 0..m-1``."""
    c = [rel.x[0] if rel.x else 0]
    for bj, xj in zip(enc.b, rel.x):
        c.append(c[-1] + bj - xj)
    return CParams(tuple(c))


def _check_pair(I: tuple[int, ...], J: tuple[int, ...]):
    if len(I) != len(J) or I.count(PLUS) != J.count(PLUS):
        raise WeightMismatch(f"{I} and {J} have different weights")


def normalize_pair(I: Word, J: Word) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    Strip leading minuses and trailing pluses of ``I`` together with the
    matching entries of ``J``; ``None`` when a forced entry of ``J`` differs
    (the coefficient is then zero).
    """
    I, J = to_word(I), to_word(J)
    _check_pair(I, J)
    lo, hi = 0, len(I)
    while lo < hi and I[lo] == MINUS:
        if J[lo] != MINUS:
            return None
        lo += 1
    while hi > lo and I[hi - 1] == PLUS:
        if J[hi - 1] != PLUS:
            return None
        hi -= 1
    return I[lo:hi], J[lo:hi]


def is_controlled(I: Word, J: Word) -> bool:
    I, J = to_word(I), to_word(J)
    # + > -, and PLUS=1 < MINUS=2, so i_a >= i_{a+1} means I[a] <= I[a+1]
    return all(not (I[p] <= I[p + 1] and J[p] == MINUS and J[p + 1] == PLUS) for p in range(len(I) - 1))


def reduce_to_controlled(I: Word, J: Word) -> tuple[tuple[int, ...], int]:
    """
    Swap ``-+`` to ``+-`` in ``J`` wherever ``i_a >= i_{a+1}`` until ``J`` is
    controlled by ``I``.  Returns the controlled word and the number of swaps,
    so that ``c(I, J) = v^{-swaps} c(I, J*)``.

    >>> reduce_to_controlled("++--", "-+-+")
    ((1, 1, 2, 2), 3)
    >>> reduce_to_controlled("+-+-", "-+-+")
    ((1, 2, 1, 2), 2)
    """
    I, J = to_word(I), to_word(J)
    _check_pair(I, J)
    out = list(J)
    swaps = 0
    start = 0
    n = len(I)
    # maximal stretches joined by i_a >= i_{a+1} are sorted to pluses-first
    while start < n:
        end = start
        while end + 1 < n and I[end] <= I[end + 1]:
            end += 1
        seg = out[start:end + 1]
        minus_seen = 0
        for x in seg:
            if x == MINUS:
                minus_seen += 1
            else:
                swaps += minus_seen
        plus = seg.count(PLUS)
        out[start:end + 1] = [PLUS] * plus + [MINUS] * (len(seg) - plus)
        start = end + 1
    return tuple(out), swaps


def select_junction(enc: BlockEncoding) -> int:
    """
    Smallest block index ``i`` with ``a_i >= b_i`` (or ``i = 0``) and
    ``a_{i+1} <= b_{i+1}`` (or ``i = m-1``).
    """
    b, a = enc.b, enc.a
    m = enc.m
    for i in range(m):
        if (i == 0 or a[i - 1] >= b[i]) and (i == m - 1 or a[i] <= b[i + 1]):
            return i
    raise AssertionError(f"no junction for {enc}")


@dataclass(frozen=True)
class _Term:
    s: int
    binomials: LaurentPoly
    f: int
    L: tuple[int, ...]
    J_s: tuple[int, ...]


def recursion_terms(I: Word, J: Word) -> tuple[int, list[_Term]]:
    """
    One step of the recursion for a normalized ``I`` (``+`` first, ``-``
    last) and ``J`` controlled by it: ``c(I, J) = sum_s binomials * v^f *
    c(L, J_s)``.  Returns the chosen junction and the terms with nonzero
    binomials.
    """
    I, J = to_word(I), to_word(J)
    enc = encode(I)
    if decode(enc) != I:
        raise ValueError(f"{I} is not normalized")
    x = encode_relative(enc, J).x
    b, a = enc.b, enc.a
    m = enc.m
    i = select_junction(enc)
    bi, ai1, xi = b[i], a[i], x[i]
    size = bi + ai1
    # neighbouring block data; absent blocks count as empty
    b_prev = b[i - 1] if i > 0 else 0
    a_i = a[i - 1] if i > 0 else 0
    x_prev = x[i - 1] if i > 0 else 0
    x_next = x[i + 1] if i + 1 < m else 0

    blocks_L: list[tuple[int, int]] = [(b[j], a[j]) for j in range(i - 1)]
    blocks_L.append((b_prev, a_i + ai1))
    blocks_L.append((bi + (b[i + 1] if i + 1 < m else 0), a[i + 1] if i + 1 < m else 0))
    blocks_L += [(b[j], a[j]) for j in range(i + 2, m)]
    L = tuple(t for bj, aj in blocks_L for t in (PLUS,) * bj + (MINUS,) * aj)

    terms = []
    for s in range(max(0, ai1 - (size - xi)), min(xi, ai1) + 1):
        binoms = gauss_binomial(xi, s) * gauss_binomial(size - xi, ai1 - s)
        f = s * (bi - xi) + s * s - s * (a_i + b_prev - x_prev) - x_next * (bi - xi + s)
        xs_L = list(x[:max(i - 1, 0)])
        xs_L.append(x_prev + s)
        xs_L.append(xi + x_next - s)
        xs_L += list(x[i + 2:])
        J_s = tuple(t for (bj, aj), xj in zip(blocks_L, xs_L)
                    for t in (PLUS,) * xj + (MINUS,) * (bj + aj - xj))
        terms.append(_Term(s, binoms, f, L, J_s))
    return i, terms


@functools.lru_cache(maxsize=None)
def _c_normalized(I: tuple[int, ...], J: tuple[int, ...]) -> LaurentPoly:
    if not I:
        return ONE
    _, terms = recursion_terms(I, J)
    total = ZERO
    for t in terms:
        c = coefficient_c(t.L, t.J_s)
        if c:
            total = total + t.binomials * c.shift(t.f)
    return total


def coefficient_c(I: Word, J: Word) -> LaurentPoly:
    """The coefficient of ``e_J`` in the canonical basis vector ``b_I``."""
    pair = normalize_pair(I, J)
    if pair is None:
        return ZERO
    I, J = pair
    J, swaps = reduce_to_controlled(I, J)
    return _c_normalized(I, J).shift(-swaps)


def h_exponent(I: Word, J: Word) -> int:
    """
    ``h(I, J) = -sum_{j=0}^{m-1} c_j c_{j+1} + sum_{j=1}^{m-1} c_j (c_j + a_j + b_j)``
    for normalized ``I`` and ``J`` controlled by ``I``, with ``c`` shifted so
    that ``c_0 = 0`` (then ``c_m = 0`` as well).

    >>> h_exponent("+-+-", "--++")
    3
    """
    enc = encode(I)
    if not enc.m:
        return 0
    rel = encode_relative(enc, J)
    c = [cj - rel.x[0] for cj in c_params(enc, rel).c]
    m = enc.m
    first = sum(c[j] * c[j + 1] for j in range(0, m))
    second = sum(c[j] * (c[j] + enc.a[j - 1] + enc.b[j]) for j in range(1, m))
    return -first + second


def recursion_check(I: Word, J: Word) -> bool:
    """
    Check one step of the ``c^0`` recursion: every nonzero term ``s`` must
    carry the exponent ``s b_i + (b_i - x_i + s) a_{i+1}`` once ``h`` is
    absorbed.
    """
    pair = normalize_pair(I, J)
    if pair is None or not pair[0]:
        return True
    I, J = pair
    J, _ = reduce_to_controlled(I, J)
    enc = encode(I)
    x = encode_relative(enc, J).x
    i, terms = recursion_terms(I, J)
    h = h_exponent(I, J)
    total = ZERO
    for t in terms:
        sub = normalize_pair(t.L, t.J_s)
        if sub is None or not _c_normalized(*sub):
            continue
        L, Js = sub
        want = t.s * enc.b[i] + (enc.b[i] - x[i] + t.s) * enc.a[i]
        if h + t.f - h_exponent(L, Js) != want:
            return False
        c0_sub = _c_normalized(L, Js).shift(h_exponent(L, Js))
        total = total + t.binomials * c0_sub.shift(want)
    return total == _c_normalized(I, J).shift(h)


def coefficient_c0(I: Word, J: Word) -> LaurentPoly:
    """``v^{h(I,J)} c(I,J)`` for ``J`` controlled by ``I``."""
    I, J = to_word(I), to_word(J)
    pair = normalize_pair(I, J)
    if not is_controlled(I, J):
        raise NotControlled(f"{J} is not controlled by {I}")
    if pair is None:
        return ZERO
    I, J = pair
    return _c_normalized(I, J).shift(h_exponent(I, J))
