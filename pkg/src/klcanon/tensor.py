"""
Tensor powers ``V^{(x)n}`` of the vector representation of ``U_q(sl_k)``.

Basis vectors ``e_I`` are keyed by sequences ``I`` in ``{1..k}^n``.  Two
comultiplications are supported: ``STANDARD`` and ``BARRED`` (``v`` and
``v^-1`` swapped in the Cartan factors).  The braiding drops the global scalar
``v^{-+1/n}`` so that every matrix entry is an integer Laurent polynomial.

>>> str(canonical_basis(2, (1, 2)))
'e[+-] + v^-1 e[-+]'
>>> str(dual_canonical_basis(2, (1, 2)))
'e[+-] - v^-1 e[-+]'
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .combinatorics import (
    ParabolicContext, format_sequence, inversions, parabolic_context, weight_of,
)
from .errors import CapacityError, ContextMismatch, IndexOutOfRange
from .hecke import HeckeVector, UParam, _cache, _element_idx
from .laurent import LaurentPoly, RationalFunction, as_rational, simplify

__all__ = [
    "ComultChoice", "TensorVector",
    "generator_action", "braiding", "braiding_inverse", "hecke_on_tensor",
    "phi", "phi_inverse", "psi", "canonical_basis", "dual_canonical_basis",
    "canonical_basis_direct", "dual_canonical_basis_direct", "pairing", "MAX_WEIGHT_SPACE",
]

MAX_WEIGHT_SPACE = 100_000

V = LaurentPoly.v()
V_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.const(1)
_V_MINUS_VINV = LaurentPoly({1: 1, -1: -1})


class ComultChoice(enum.Enum):
    STANDARD = "standard"
    BARRED = "barred"

    @property
    def u(self) -> UParam:
        return UParam.MINUS_ONE if self is ComultChoice.STANDARD else UParam.V_MINUS_2


def _cadd(a, b):
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return a + b
    return simplify(as_rational(a) + b)


def _cmul(a, b):
    if isinstance(a, LaurentPoly) and isinstance(b, (LaurentPoly, int)):
        return a * b
    return simplify(as_rational(a) * b)


def _acc(out: dict, key, c):
    old = out.get(key)
    s = c if old is None else _cadd(old, c)
    if s:
        out[key] = s
    elif old is not None:
        del out[key]


@dataclass(frozen=True)
class TensorVector:
    """A vector of ``V^{(x)n}``: sparse map from sequences to coefficients.

    Coefficients are LaurentPoly, or RationalFunction where a projector
    introduces denominators.
    """
    k: int
    n: int
    coeffs: Mapping[tuple, object]

    @classmethod
    def basis(cls, k: int, seq: Iterable[int]) -> TensorVector:
        seq = tuple(seq)
        return cls(k, len(seq), {seq: ONE})

    @classmethod
    def zero(cls, k: int, n: int) -> TensorVector:
        return cls(k, n, {})

    @classmethod
    def from_terms(cls, k: int, n: int, terms: Iterable[tuple[tuple, object]]) -> TensorVector:
        out: dict = {}
        for seq, c in terms:
            _acc(out, tuple(seq), simplify(c))
        return cls(k, n, out)

    def coefficient(self, seq) -> object:
        return self.coeffs.get(tuple(seq), LaurentPoly())

    def _check(self, other: TensorVector):
        if (self.k, self.n) != (other.k, other.n):
            raise ContextMismatch(f"V^{self.n} of sl_{self.k} vs V^{other.n} of sl_{other.k}")

    def __add__(self, other: TensorVector) -> TensorVector:
        self._check(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            _acc(out, s, c)
        return TensorVector(self.k, self.n, out)

    def __neg__(self):
        return TensorVector(self.k, self.n, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> TensorVector:
        out = {}
        for s, c in self.coeffs.items():
            p = _cmul(c, f)
            if p:
                out[s] = p
        return TensorVector(self.k, self.n, out)

    def __rmul__(self, f):
        return self.scale(f)

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        if (self.k, self.n) != (other.k, other.n):
            return False
        a = {s: c for s, c in self.coeffs.items() if c}
        b = {s: c for s, c in other.coeffs.items() if c}
        return a.keys() == b.keys() and all(a[s] == b[s] for s in a)

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.coeffs)))

    def is_laurent(self) -> bool:
        return all(isinstance(c, LaurentPoly) or c.is_laurent() for c in self.coeffs.values())

    def weights(self) -> set[tuple[int, ...]]:
        return {weight_of(s, self.k) for s in self.coeffs}

    def weight(self) -> tuple[int, ...]:
        ws = self.weights()
        if len(ws) != 1:
            raise ContextMismatch(f"vector is not weight-homogeneous: {sorted(ws)}")
        return next(iter(ws))

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms ordered by inversion count, then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (inversions(kv[0]), kv[0]))

    def to_json(self) -> list[dict]:
        return [{"I": format_sequence(s, self.k), "coeff": c.to_json()} for s, c in self.sorted_terms()]

    def __str__(self):
        parts = []
        for s, c in self.sorted_terms():
            label = f"e[{format_sequence(s, self.k)}]"
            text = str(c)
            if text == "1":
                body = label
            elif text == "-1":
                body = "-" + label
            elif isinstance(c, LaurentPoly) and len(c) == 1:
                body = f"{text} {label}"
            else:
                body = f"({text}) {label}"
            if parts:
                body = (" - " + body[1:]) if body.startswith("-") else " + " + body
            parts.append(body)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"TensorVector(k={self.k}, '{self}')"


# -- U_q(sl_k) generators ------------------------------------------------------

def _k_exponent(i: int, letter: int) -> int:
    if letter == i:
        return 1
    if letter == i + 1:
        return -1
    return 0


def generator_action(gen: str, i: int, comult: ComultChoice, x: TensorVector) -> TensorVector:
    """
    Act by ``E_i``, ``F_i`` or ``K_i = v^{H_i}`` through the iterated coproduct.

    >>> x = TensorVector.basis(2, (2, 2))
    >>> str(generator_action("E", 1, ComultChoice.STANDARD, x))
    'e[+-] + v^-1 e[-+]'
    """
    if not 1 <= i <= x.k - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{x.k - 1}")
    gen = gen.upper()
    sgn = 1 if comult is ComultChoice.STANDARD else -1
    out: dict = {}
    for seq, c in x.coeffs.items():
        if gen == "K":
            e = sum(_k_exponent(i, a) for a in seq)
            _acc(out, seq, _cmul(c, LaurentPoly.monomial(e)))
        elif gen == "E":
            # E at slot p, K^{sgn} on slots before p
            before = 0
            for p, a in enumerate(seq):
                if a == i + 1:
                    new = seq[:p] + (i,) + seq[p + 1:]
                    _acc(out, new, _cmul(c, LaurentPoly.monomial(sgn * before)))
                before += _k_exponent(i, a)
        elif gen == "F":
            # F at slot p, K^{-sgn} on slots after p
            after = sum(_k_exponent(i, a) for a in seq)
            for p, a in enumerate(seq):
                after -= _k_exponent(i, a)
                if a == i:
                    new = seq[:p] + (i + 1,) + seq[p + 1:]
                    _acc(out, new, _cmul(c, LaurentPoly.monomial(-sgn * after)))
        else:
            raise ValueError(f"unknown generator {gen!r}; expected E, F or K")
    return TensorVector(x.k, x.n, out)


# -- braiding and Hecke action -------------------------------------------------

def _two_slot(x: TensorVector, i: int, rule) -> TensorVector:
    if not 1 <= i <= x.n - 1:
        raise IndexOutOfRange(f"slot index {i} outside 1..{x.n - 1}")
    out: dict = {}
    for seq, c in x.coeffs.items():
        a, b = seq[i - 1], seq[i]
        swapped = seq[: i - 1] + (b, a) + seq[i + 1:]
        for same, f in rule(a, b):
            if f is not None:
                _acc(out, seq if same else swapped, _cmul(c, f))
    return TensorVector(x.k, x.n, out)


def braiding(comult: ComultChoice, i: int, x: TensorVector) -> TensorVector:
    """The balanced R-matrix on slots ``(i, i+1)``."""
    d = _V_MINUS_VINV if comult is ComultChoice.STANDARD else -_V_MINUS_VINV
    diag = V if comult is ComultChoice.STANDARD else V_INV

    def rule(a, b):
        if a < b:
            return ((False, ONE), (True, d))
        if a > b:
            return ((False, ONE),)
        return ((True, diag),)

    return _two_slot(x, i, rule)


def braiding_inverse(comult: ComultChoice, i: int, x: TensorVector) -> TensorVector:
    d = _V_MINUS_VINV if comult is ComultChoice.STANDARD else -_V_MINUS_VINV
    diag = V_INV if comult is ComultChoice.STANDARD else V

    def rule(a, b):
        if a < b:
            return ((False, ONE),)
        if a > b:
            return ((False, ONE), (True, -d))
        return ((True, diag),)

    return _two_slot(x, i, rule)


def hecke_on_tensor(comult: ComultChoice, i: int, x: TensorVector) -> TensorVector:
    """``T_i`` acting as ``-v^-1 B_i`` (STANDARD) or ``v^-1 B_i`` (BARRED)."""
    f = -V_INV if comult is ComultChoice.STANDARD else V_INV
    return braiding(comult, i, x).scale(f)


# -- transport between M and V^n[m] -------------------------------------------

def _check_capacity(weight: tuple[int, ...]):
    size = math.factorial(sum(weight))
    for m in weight:
        size //= math.factorial(m)
    if size > MAX_WEIGHT_SPACE:
        raise CapacityError(f"weight space {weight} has {size} basis vectors (limit {MAX_WEIGHT_SPACE})")


def _context(weight: tuple[int, ...]) -> ParabolicContext:
    _check_capacity(weight)
    return parabolic_context(tuple(weight))


def _sign(comult: ComultChoice, length: int) -> int:
    return -1 if comult is ComultChoice.STANDARD and length % 2 else 1


def phi(comult: ComultChoice, x: HeckeVector) -> TensorVector:
    """``m_sigma -> (-1)^{l(sigma)} e_{sigma(I0)}`` (STANDARD) or ``e_{sigma(I0)}`` (BARRED)."""
    ctx = x.ctx
    out = {}
    for p, c in x.coeffs.items():
        if not c:
            continue
        idx = ctx.index.get(p)
        if idx is None:
            raise ContextMismatch(f"{p} is not a coset representative for weight {ctx.weight}")
        out[ctx.seqs[idx]] = c * _sign(comult, ctx.lengths[idx])
    return TensorVector(ctx.k, ctx.n, out)


def phi_inverse(comult: ComultChoice, x: TensorVector) -> HeckeVector:
    ctx = _context(x.weight())
    out = {}
    for seq, c in x.coeffs.items():
        idx = ctx.seq_index[seq]
        out[ctx.reps[idx]] = c * _sign(comult, ctx.lengths[idx])
    return HeckeVector(ctx, out)


def _cbar(c):
    return c.bar()


def psi(comult: ComultChoice, x: TensorVector) -> TensorVector:
    """
    The antilinear involution ``psi`` (STANDARD) or ``psi'`` (BARRED),
    obtained by carrying the bar involution of ``M`` across ``phi``.
    """
    if not x.coeffs:
        return x
    ctx = _context(x.weight())
    cache = _cache(comult.u, ctx)
    out: dict = {}
    for seq, c in x.coeffs.items():
        idx = ctx.seq_index[seq]
        cb = _cbar(c)
        s_sigma = _sign(comult, ctx.lengths[idx])
        for t, b in cache.column(idx).items():
            _acc(out, ctx.seqs[t], _cmul(cb, b * (s_sigma * _sign(comult, ctx.lengths[t]))))
    return TensorVector(x.k, x.n, out)


def _transport_basis(comult: ComultChoice, k: int, seq: tuple) -> TensorVector:
    seq = tuple(seq)
    if any(not 1 <= a <= k for a in seq):
        raise ValueError(f"sequence {seq} has entries outside 1..{k}")
    ctx = _context(weight_of(seq, k))
    s = ctx.seq_index[seq]
    alpha = _element_idx(comult.u, ctx, s)
    ls = ctx.lengths[s]
    out = {ctx.seqs[t]: a * (_sign(comult, ls) * _sign(comult, ctx.lengths[t])) for t, a in alpha.items()}
    return TensorVector(k, len(seq), out)


def canonical_basis(k: int, seq: Iterable[int]) -> TensorVector:
    """``b_I = (-1)^{l(sigma)} phi(C_sigma)`` for ``I = sigma(I0)``, with ``u = -1``."""
    return _transport_basis(ComultChoice.STANDARD, k, tuple(seq))


def dual_canonical_basis(k: int, seq: Iterable[int]) -> TensorVector:
    """``b^I = phi'(C_sigma)`` for ``I = sigma(I0)``, with ``u = v^-2``."""
    return _transport_basis(ComultChoice.BARRED, k, tuple(seq))


def _direct_solve(comult: ComultChoice, k: int, seq: tuple) -> TensorVector:
    """psi-fixed vector ``e_I + lower terms`` solved directly in the tensor space."""
    from .laurent import split_negative

    seq = tuple(seq)
    ctx = _context(weight_of(seq, k))
    psi_cols: dict = {}

    def col(s):
        c = psi_cols.get(s)
        if c is None:
            c = psi(comult, TensorVector.basis(k, s)).coeffs
            psi_cols[s] = c
        return c

    beta = {seq: ONE}
    rhs: dict = {}
    for s, c in col(seq).items():
        if s != seq:
            _acc(rhs, s, c)
    # psi(e_J) - e_J only involves sequences with more inversions
    order = sorted((s for s in ctx.seqs if inversions(s) > inversions(seq)), key=inversions)
    for s in order:
        r = rhs.pop(s, None)
        if r is None:
            continue
        a = split_negative(r)
        if not a:
            continue
        beta[s] = a
        ab = a.bar()
        for t, c in col(s).items():
            if t != s:
                _acc(rhs, t, c * ab)
    if rhs:
        raise AssertionError("psi matrix is not triangular for the inversion order")
    return TensorVector(k, len(seq), beta)


def canonical_basis_direct(k: int, seq: Iterable[int]) -> TensorVector:
    return _direct_solve(ComultChoice.STANDARD, k, tuple(seq))


def dual_canonical_basis_direct(k: int, seq: Iterable[int]) -> TensorVector:
    return _direct_solve(ComultChoice.BARRED, k, tuple(seq))


def pairing(x: TensorVector, y: TensorVector) -> RationalFunction:
    """Bilinear form with ``<e_I, e_I'> = 1`` exactly when ``I`` is ``I'`` reversed."""
    x._check(y)
    total = None
    for seq, c in x.coeffs.items():
        d = y.coeffs.get(seq[::-1])
        if d is None:
            continue
        p = _cmul(c, d)
        total = p if total is None else _cadd(total, p)
    return as_rational(total if total is not None else 0)
