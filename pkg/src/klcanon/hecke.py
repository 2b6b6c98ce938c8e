"""
The parabolic Hecke module ``M`` with basis ``m_sigma`` (sigma in W^J), its
bar involution, and the Kazhdan-Lusztig basis ``C_sigma``.

The Hecke algebra uses ``v`` with ``(T_s + 1)(T_s - v^-2) = 0`` and
``q = v^-2``.  The parameter ``u`` in {-1, v^-2} is the eigenvalue of ``T_s``
on ``m_sigma`` when ``s sigma`` leaves ``W^J``.

>>> ctx = parabolic_context((1, 1))
>>> e, s1 = ctx.reps
>>> str(kl_element(UParam.MINUS_ONE, ctx, s1).vector)
'm[2,1] - v^-1 m[1,2]'
"""
from __future__ import annotations

import enum
import itertools
import threading
from dataclasses import dataclass
from typing import Mapping

from .combinatorics import (
    ParabolicContext, Permutation, longest_element, parabolic_context, reduced_word,
    bruhat_leq,
)
from .errors import FormatError, IndexOutOfRange, NotCosetMinimal, ContextMismatch
from .laurent import LaurentPoly, QPolynomial, split_negative

__all__ = [
    "UParam", "HeckeVector", "KLElement", "DeodharReport",
    "t_action", "t_inverse_action", "bar_basis", "bar_vector", "kl_element", "kl_basis",
    "parabolic_kl", "classical_kl", "check_deodhar", "parabolic_subgroup",
]

V = LaurentPoly.v()
V_INV = LaurentPoly.monomial(-1)
ONE = LaurentPoly.const(1)
_DOWN_DIAG = LaurentPoly({-2: 1, 0: -1})   # v^-2 - 1
_UP_DIAG_INV = LaurentPoly({2: 1, 0: -1})  # v^2 - 1


class UParam(enum.Enum):
    MINUS_ONE = "-1"
    V_MINUS_2 = "q"

    @property
    def scalar(self) -> LaurentPoly:
        return LaurentPoly.const(-1) if self is UParam.MINUS_ONE else LaurentPoly.monomial(-2)

    @property
    def inverse_scalar(self) -> LaurentPoly:
        # eigenvalue of T^-1 = v^2 T + v^2 - 1 on a u-eigenvector
        return LaurentPoly.const(-1) if self is UParam.MINUS_ONE else LaurentPoly.monomial(2)

    @classmethod
    def parse(cls, text: str) -> UParam:
        text = text.strip()
        if text in ("-1", "minus_one", "MINUS_ONE"):
            return cls.MINUS_ONE
        if text in ("q", "v^-2", "v-2", "V_MINUS_2"):
            return cls.V_MINUS_2
        raise ValueError(f"unknown u value {text!r}; expected -1 or q")


@dataclass(frozen=True)
class HeckeVector:
    """A vector of ``M``: a sparse map from coset representatives to coefficients."""
    ctx: ParabolicContext
    coeffs: Mapping[Permutation, LaurentPoly]

    @classmethod
    def basis(cls, ctx: ParabolicContext, sigma: Permutation) -> HeckeVector:
        if sigma not in ctx.index:
            raise NotCosetMinimal(f"{sigma} is not a minimal coset representative")
        return cls(ctx, {sigma: ONE})

    @classmethod
    def _from_idx(cls, ctx: ParabolicContext, vec: Mapping[int, LaurentPoly]) -> HeckeVector:
        return cls(ctx, {ctx.reps[i]: c for i, c in vec.items() if c})

    def _to_idx(self) -> dict[int, LaurentPoly]:
        out = {}
        for p, c in self.coeffs.items():
            if p not in self.ctx.index:
                raise NotCosetMinimal(f"{p} is not a minimal coset representative")
            out[self.ctx.index[p]] = LaurentPoly.coerce(c)
        return out

    def coefficient(self, sigma: Permutation) -> LaurentPoly:
        return LaurentPoly.coerce(self.coeffs.get(sigma, 0))

    def _check(self, other: HeckeVector):
        if self.ctx != other.ctx:
            raise ContextMismatch("vectors live in different modules")

    def __add__(self, other: HeckeVector) -> HeckeVector:
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return HeckeVector(self.ctx, {p: c for p, c in out.items() if c})

    def __neg__(self):
        return HeckeVector(self.ctx, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: HeckeVector) -> HeckeVector:
        return self + (-other)

    def scale(self, f) -> HeckeVector:
        out = {p: c * f for p, c in self.coeffs.items()}
        return HeckeVector(self.ctx, {p: c for p, c in out.items() if c})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, HeckeVector):
            return NotImplemented
        return self.ctx == other.ctx and _nonzero(self.coeffs) == _nonzero(other.coeffs)

    def __hash__(self):
        return hash((self.ctx, frozenset(_nonzero(self.coeffs).items())))

    def __str__(self):
        idx = self.ctx.index
        parts = []
        for p in sorted(self.coeffs, key=lambda p: -idx[p]):
            c = self.coeffs[p]
            if not c:
                continue
            s = str(c)
            if s == "1":
                body = f"m[{p}]"
            elif s == "-1":
                body = f"-m[{p}]"
            elif len(c) == 1:
                body = f"{s} m[{p}]"
            else:
                body = f"({s}) m[{p}]"
            if parts:
                body = (" - " + body[1:]) if body.startswith("-") else " + " + body
            parts.append(body)
        return "".join(parts) or "0"


def _nonzero(d):
    return {k: c for k, c in d.items() if c}


@dataclass(frozen=True)
class KLElement:
    sigma: Permutation
    vector: HeckeVector
    u: UParam

    def coefficient(self, tau: Permutation) -> LaurentPoly:
        return self.vector.coefficient(tau)


# -- index-level kernels -----------------------------------------------------

def _add_into(acc: dict, key, c: LaurentPoly):
    old = acc.get(key)
    if old is None:
        acc[key] = c
    else:
        s = old + c
        if s:
            acc[key] = s
        else:
            del acc[key]


def _t_idx(u: UParam, ctx: ParabolicContext, i: int, vec: Mapping[int, LaurentPoly]) -> dict:
    row = ctx.steps[i - 1]
    uval = u.scalar
    out: dict[int, LaurentPoly] = {}
    for idx, c in vec.items():
        kind, tgt = row[idx]
        if kind == 0:
            _add_into(out, tgt, c.shift(-1))
            _add_into(out, idx, c * _DOWN_DIAG)
        elif kind == 1:
            _add_into(out, tgt, c.shift(-1))
        else:
            _add_into(out, idx, c * uval)
    return out


def _t_inv_idx(u: UParam, ctx: ParabolicContext, i: int, vec: Mapping[int, LaurentPoly]) -> dict:
    # T^-1 = v^2 T + v^2 - 1, expanded per case of the T action
    row = ctx.steps[i - 1]
    uinv = u.inverse_scalar
    out: dict[int, LaurentPoly] = {}
    for idx, c in vec.items():
        kind, tgt = row[idx]
        if kind == 0:
            _add_into(out, tgt, c.shift(1))
        elif kind == 1:
            _add_into(out, tgt, c.shift(1))
            _add_into(out, idx, c * _UP_DIAG_INV)
        else:
            _add_into(out, idx, c * uinv)
    return out


def _check_gen(ctx: ParabolicContext, i: int):
    if not 1 <= i <= ctx.n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{ctx.n - 1}")


def t_action(u: UParam, ctx: ParabolicContext, i: int, x: HeckeVector) -> HeckeVector:
    """Apply ``T_{s_i}`` to ``x``."""
    _check_gen(ctx, i)
    return HeckeVector._from_idx(ctx, _t_idx(u, ctx, i, x._to_idx()))


def t_inverse_action(u: UParam, ctx: ParabolicContext, i: int, x: HeckeVector) -> HeckeVector:
    _check_gen(ctx, i)
    return HeckeVector._from_idx(ctx, _t_inv_idx(u, ctx, i, x._to_idx()))


class _ModuleCache:
    """Bar-matrix columns and KL elements for one (u, ctx) pair.

    Reads are lock-free dict lookups; inserts take the lock.
    """

    def __init__(self, u: UParam, ctx: ParabolicContext):
        self.u = u
        self.ctx = ctx
        self.columns: dict[int, dict[int, LaurentPoly]] = {}
        self.elements: dict[int, dict[int, LaurentPoly]] = {}
        self.basis: list | None = None
        self.lock = threading.Lock()

    def column(self, idx: int) -> dict[int, LaurentPoly]:
        col = self.columns.get(idx)
        if col is None:
            col = _bar_column(self.u, self.ctx, idx)
            with self.lock:
                self.columns.setdefault(idx, col)
        return col


_CACHES: dict[tuple, _ModuleCache] = {}
_CACHES_LOCK = threading.Lock()


def _cache(u: UParam, ctx: ParabolicContext) -> _ModuleCache:
    key = (u, ctx.weight)
    c = _CACHES.get(key)
    if c is None:
        with _CACHES_LOCK:
            c = _CACHES.setdefault(key, _ModuleCache(u, ctx))
    return c


def _bar_column(u: UParam, ctx: ParabolicContext, idx: int, word: list[int] | None = None) -> dict:
    sigma = ctx.reps[idx]
    if word is None:
        word = reduced_word(sigma)
    vec = {0: ONE}
    for i in reversed(word):
        vec = _t_inv_idx(u, ctx, i, vec)
    lam = ctx.lengths[idx]
    col = {j: c.shift(-lam) for j, c in vec.items()}
    # unitriangularity: leading coefficient 1, all other terms strictly shorter
    if col.get(idx) != ONE or any(ctx.lengths[j] >= lam for j in col if j != idx):
        raise AssertionError(f"bar(m_{sigma}) is not unitriangular")
    return col


def _sigma_index(ctx: ParabolicContext, sigma: Permutation) -> int:
    try:
        return ctx.index[sigma]
    except KeyError:
        raise NotCosetMinimal(f"{sigma} is not a minimal coset representative for weight {ctx.weight}") from None


def bar_basis(u: UParam, ctx: ParabolicContext, sigma: Permutation, word: list[int] | None = None) -> HeckeVector:
    """
    ``bar(m_sigma) = v^{-l(sigma)} T_{i_1}^{-1} ... T_{i_r}^{-1} m_e`` for a reduced
    word ``sigma = s_{i_1} ... s_{i_r}`` (the canonical one unless ``word`` is given).
    """
    idx = _sigma_index(ctx, sigma)
    if word is None:
        col = _cache(u, ctx).column(idx)
    else:
        if Permutation.from_word(word, ctx.n) != sigma or len(word) != sigma.length:
            raise ValueError(f"{word} is not a reduced word for {sigma}")
        col = _bar_column(u, ctx, idx, word)
    return HeckeVector._from_idx(ctx, col)


def _bar_idx(cache: _ModuleCache, vec: Mapping[int, LaurentPoly]) -> dict:
    out: dict[int, LaurentPoly] = {}
    for idx, c in vec.items():
        cb = c.bar()
        for j, b in cache.column(idx).items():
            _add_into(out, j, cb * b)
    return out


def bar_vector(u: UParam, x: HeckeVector) -> HeckeVector:
    """The antilinear bar involution of ``M`` applied to an arbitrary vector."""
    return HeckeVector._from_idx(x.ctx, _bar_idx(_cache(u, x.ctx), x._to_idx()))


def _solve(cache: _ModuleCache, s: int) -> dict[int, LaurentPoly]:
    """Triangular solve for the coefficients of C_sigma, sigma = reps[s]."""
    alpha = {s: ONE}
    rhs: dict[int, LaurentPoly] = {}
    for j, b in cache.column(s).items():
        if j != s:
            _add_into(rhs, j, b)
    # representatives are sorted by length, so descending index is a valid order
    for t in range(s - 1, -1, -1):
        r = rhs.pop(t, None)
        if r is None:
            continue
        a = split_negative(r)
        if not a:
            continue
        alpha[t] = a
        ab = a.bar()
        for j, b in cache.column(t).items():
            if j != t:
                _add_into(rhs, j, ab * b)
    return alpha


def _element_idx(u: UParam, ctx: ParabolicContext, s: int) -> dict[int, LaurentPoly]:
    cache = _cache(u, ctx)
    el = cache.elements.get(s)
    if el is None:
        el = _solve(cache, s)
        with cache.lock:
            cache.elements.setdefault(s, el)
    return el


def kl_element(u: UParam, ctx: ParabolicContext, sigma: Permutation) -> KLElement:
    """The unique bar-invariant ``C_sigma = m_sigma + sum alpha_tau m_tau`` with
    lower coefficients in ``v^-1 Z[v^-1]``."""
    s = _sigma_index(ctx, sigma)
    return KLElement(sigma, HeckeVector._from_idx(ctx, _element_idx(u, ctx, s)), u)


def _basis_by_recursion(u: UParam, ctx: ParabolicContext) -> list[dict[int, LaurentPoly]]:
    """
    All ``C_sigma`` at once: ``C_{s sigma}`` is ``v(T_s + 1) C_sigma`` minus
    bar-invariant multiples of shorter ``C_tau`` that clear the coefficients
    of nonnegative degree.  Much cheaper than one triangular solve per sigma.
    """
    basis: list[dict | None] = [None] * len(ctx)
    basis[0] = {0: ONE}
    for idx in range(1, len(ctx)):
        word = reduced_word(ctx.reps[idx])
        i = word[0]
        kind, prev = ctx.steps[i - 1][idx]
        assert kind == 0
        c_prev = basis[prev]
        x = _t_idx(u, ctx, i, c_prev)
        for j, c in c_prev.items():
            _add_into(x, j, c)
        x = {j: c.shift(1) for j, c in x.items()}
        for t in range(idx - 1, -1, -1):
            c = x.get(t)
            if c is None:
                continue
            mu_terms = {}
            for e, a in c.items():
                if e >= 0:
                    mu_terms[e] = a
                    if e > 0:
                        mu_terms[-e] = a
            if not mu_terms:
                continue
            mu = LaurentPoly(mu_terms)
            for j, b in basis[t].items():
                _add_into(x, j, -(mu * b))
        basis[idx] = x
    return basis


def _basis_idx(u: UParam, ctx: ParabolicContext) -> list[dict[int, LaurentPoly]]:
    cache = _cache(u, ctx)
    if cache.basis is None:
        b = _basis_by_recursion(u, ctx)
        with cache.lock:
            if cache.basis is None:
                cache.basis = b
    return cache.basis


def kl_basis(u: UParam, ctx: ParabolicContext) -> dict[Permutation, KLElement]:
    """Every ``C_sigma`` of the module, keyed by sigma."""
    return {ctx.reps[i]: KLElement(ctx.reps[i], HeckeVector._from_idx(ctx, el), u)
            for i, el in enumerate(_basis_idx(u, ctx))}


def _extract(alpha: LaurentPoly, d: int) -> QPolynomial:
    """Solve ``alpha = (-v)^{-d} bar(P)`` for ``P``, with ``d = l(sigma) - l(tau)``."""
    if not alpha:
        return QPolynomial()
    pbar = alpha.shift(d) * (-1 if d % 2 else 1)
    try:
        return QPolynomial.from_laurent(pbar.bar())
    except ValueError:
        raise FormatError(f"coefficient {alpha} is not of the form (-v)^{-d} bar(P)") from None


def parabolic_kl(u: UParam, ctx: ParabolicContext, tau: Permutation, sigma: Permutation,
                 *, method: str = "solve") -> QPolynomial:
    """
    Parabolic KL polynomial ``P^J_{tau,sigma}`` in ``q``.

    ``method`` selects how ``C_sigma`` is obtained: ``"solve"`` is the
    per-element triangular solve, ``"recursion"`` the shared all-basis build.
    """
    t = _sigma_index(ctx, tau)
    s = _sigma_index(ctx, sigma)
    if method == "solve":
        el = _element_idx(u, ctx, s)
    elif method == "recursion":
        el = _basis_idx(u, ctx)[s]
    else:
        raise ValueError(f"unknown method {method!r}")
    d = ctx.lengths[s] - ctx.lengths[t]
    alpha = el.get(t)
    if t == s:
        return QPolynomial({0: 1})
    if alpha is None:
        return QPolynomial()
    p = _extract(alpha, d)
    if d <= 0 or 2 * p.degree() > d - 1:
        raise FormatError(f"P^J_({tau},{sigma}) = {p} violates the degree bound")
    return p


def all_parabolic_kl(u: UParam, ctx: ParabolicContext, *, method: str = "solve") -> dict[tuple[int, int], QPolynomial]:
    """``{(tau_idx, sigma_idx): P}`` for every nonzero parabolic KL polynomial."""
    out = {}
    if method == "solve":
        elements = [_element_idx(u, ctx, s) for s in range(len(ctx))]
    else:
        elements = _basis_idx(u, ctx)
    for s, el in enumerate(elements):
        for t, alpha in el.items():
            out[t, s] = QPolynomial({0: 1}) if t == s else _extract(alpha, ctx.lengths[s] - ctx.lengths[t])
    return out


def _classical_context(n: int) -> ParabolicContext:
    return parabolic_context((1,) * n)


def classical_kl(y: Permutation, w: Permutation) -> QPolynomial:
    """
    The ordinary KL polynomial ``P_{y,w}`` of ``S_n``.

    >>> str(classical_kl(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2))))
    'q + 1'
    """
    if y.n != w.n:
        from .errors import LengthMismatch
        raise LengthMismatch("permutations of different degree")
    ctx = _classical_context(y.n)
    p = parabolic_kl(UParam.MINUS_ONE, ctx, y, w)
    p2 = parabolic_kl(UParam.V_MINUS_2, ctx, y, w)
    if p != p2:
        raise AssertionError(f"u-dependence for J empty: {p} vs {p2}")
    return p


def parabolic_subgroup(ctx: ParabolicContext) -> list[Permutation]:
    """All elements of ``W_J``: independent permutations within each block of ``I0``."""
    blocks = []
    start = 1
    for m in reversed(ctx.weight):
        blocks.append(list(range(start, start + m)))
        start += m
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [x for part in choice for x in part]
        out.append(Permutation(tuple(images)))
    return out


@dataclass(frozen=True)
class DeodharReport:
    tau: Permutation
    sigma: Permutation
    parabolic_minus_one: QPolynomial
    classical_shifted: QPolynomial
    parabolic_q: QPolynomial
    alternating_sum: QPolynomial

    @property
    def minus_one_holds(self) -> bool:
        return self.parabolic_minus_one == self.classical_shifted

    @property
    def q_holds(self) -> bool:
        return self.parabolic_q == self.alternating_sum

    @property
    def ok(self) -> bool:
        return self.minus_one_holds and self.q_holds


def check_deodhar(ctx: ParabolicContext, tau: Permutation, sigma: Permutation) -> DeodharReport:
    """Recompute both sides of Deodhar's two identities relating parabolic and ordinary KL polynomials."""
    _sigma_index(ctx, tau)
    _sigma_index(ctx, sigma)
    w0 = longest_element(ctx)
    lhs1 = parabolic_kl(UParam.MINUS_ONE, ctx, tau, sigma)
    rhs1 = classical_kl(tau * w0, sigma * w0)
    lhs2 = parabolic_kl(UParam.V_MINUS_2, ctx, tau, sigma)
    rhs2 = QPolynomial()
    for w in parabolic_subgroup(ctx):
        tw = tau * w
        if bruhat_leq(tw, sigma):
            p = classical_kl(tw, sigma)
            rhs2 = rhs2 + (p * (-1 if w.length % 2 else 1))
    return DeodharReport(tau, sigma, lhs1, rhs1, lhs2, rhs2)
