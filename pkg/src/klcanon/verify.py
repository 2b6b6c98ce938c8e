"""
Cross-verification suites.  Each suite runs a set of named checks up to a
size cap and reports the number of cases and any failures.

>>> report = run_suite("deodhar", max_n=3)
>>> report.ok
True
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .combinatorics import (
    Permutation, all_permutations, bruhat_leq, i0, inversions, parabolic_context,
    reduced_word, subword_leq,
)
from .grassmann import coefficient_c, recursion_check
from .hecke import (
    HeckeVector, UParam, _basis_by_recursion, _element_idx, bar_basis, bar_vector,
    check_deodhar, classical_kl, kl_element, parabolic_kl, t_action,
)
from .laurent import LaurentPoly
from .sl2 import canonical_sl2, dual_canonical_sl2, jones_wenzl
from .tensor import (
    ComultChoice, TensorVector, braiding, braiding_inverse, canonical_basis,
    canonical_basis_direct, dual_canonical_basis, dual_canonical_basis_direct,
    generator_action, hecke_on_tensor, pairing, psi,
)

__all__ = ["CheckResult", "SuiteReport", "SUITES", "run_suite", "run_all", "compositions"]

ONE = LaurentPoly.const(1)
V_INV2 = LaurentPoly.monomial(-2)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "ok": self.ok,
                "failures": self.failures[:20], "seconds": round(self.seconds, 3)}


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "max_n": self.max_n, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks]}

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if self.ok else 'FAIL'}] suite {self.suite} (max n = {self.max_n})"]
        for c in self.checks:
            out.append(f"  {'ok  ' if c.ok else 'FAIL'} {c.name}: {c.cases} cases")
            out += [f"       {f}" for f in c.failures[:5]]
        return out


def _run(name: str, cases: Iterator[tuple[str, bool]]) -> CheckResult:
    """Consume ``(label, passed)`` pairs into a result."""
    res = CheckResult(name)
    start = time.perf_counter()
    for label, passed in cases:
        res.cases += 1
        if not passed:
            res.failures.append(label)
    res.seconds = time.perf_counter() - start
    return res


def compositions(n: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    Compositions of ``n`` into positive parts.

    >>> list(compositions(3))
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            parts = (first,) + rest
            if max_parts is None or len(parts) <= max_parts:
                yield parts


def _weights(max_n: int, max_parts: int | None = None, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from compositions(n, max_parts)


def _words(max_n: int, k: int = 2, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from itertools.product(range(1, k + 1), repeat=n)


# -- hecke ----------------------------------------------------------------------

def _quadratic(max_n):
    for w in _weights(min(max_n, 5), 3):
        ctx = parabolic_context(w)
        for u in UParam:
            for sigma in ctx.reps:
                x = HeckeVector.basis(ctx, sigma)
                for i in range(1, ctx.n):
                    tx = t_action(u, ctx, i, x)
                    y = t_action(u, ctx, i, tx) + tx - tx.scale(V_INV2) - x.scale(V_INV2)
                    yield f"{u.value} {w} {sigma} T{i}", y == x - x


def _random_vector(ctx, rng):
    coeffs = {}
    for sigma in rng.sample(list(ctx.reps), min(3, len(ctx))):
        coeffs[sigma] = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3) or 1})
    return HeckeVector(ctx, coeffs)


def _braid(max_n):
    rng = random.Random(7)
    for w in _weights(min(max_n, 5), 3, min_n=3):
        ctx = parabolic_context(w)
        for u in UParam:
            x = _random_vector(ctx, rng)
            T = lambda i, y: t_action(u, ctx, i, y)
            for i in range(1, ctx.n - 1):
                yield f"{u.value} {w} braid {i}", T(i, T(i + 1, T(i, x))) == T(i + 1, T(i, T(i + 1, x)))
            for i, j in itertools.combinations(range(1, ctx.n), 2):
                if j - i > 1:
                    yield f"{u.value} {w} commute {i},{j}", T(i, T(j, x)) == T(j, T(i, x))


def _standard_generation(max_n):
    for w in _weights(min(max_n, 6)):
        ctx = parabolic_context(w)
        for u in UParam:
            e = HeckeVector.basis(ctx, ctx.reps[0])
            for sigma in ctx.reps:
                x = e
                for i in reversed(reduced_word(sigma)):
                    x = t_action(u, ctx, i, x)
                want = HeckeVector.basis(ctx, sigma).scale(LaurentPoly.monomial(-sigma.length))
                yield f"{u.value} {w} {sigma}", x == want


def _bar_involution(max_n):
    for w in _weights(min(max_n, 5)):
        ctx = parabolic_context(w)
        for u in UParam:
            for sigma in ctx.reps:
                b = bar_basis(u, ctx, sigma)
                yield f"{u.value} {w} {sigma}", bar_vector(u, b) == HeckeVector.basis(ctx, sigma)


def _reduced_word_independence(max_n):
    for w in _weights(min(max_n, 5), 3):
        ctx = parabolic_context(w)
        for u in UParam:
            for sigma in ctx.reps:
                words = _reduced_words(sigma)
                ref = bar_basis(u, ctx, sigma, words[0])
                for word in words[1:4]:
                    yield f"{u.value} {w} {sigma} {word}", bar_basis(u, ctx, sigma, word) == ref


def _reduced_words(w: Permutation) -> list[list[int]]:
    """All reduced words of ``w``, read left to right."""
    if w.length == 0:
        return [[]]
    out = []
    for i in w.left_descents():
        rest = Permutation.simple(i, w.n) * w
        out += [[i] + r for r in _reduced_words(rest)]
    return out


def _kl_properties(max_n):
    for w in _weights(min(max_n, 5)):
        ctx = parabolic_context(w)
        for u in UParam:
            rec = _basis_by_recursion(u, ctx)
            for s, sigma in enumerate(ctx.reps):
                el = kl_element(u, ctx, sigma)
                fixed = bar_vector(u, el.vector) == el.vector
                lower = all(c.max_degree() < 0 for t, c in el.vector.coeffs.items() if t != sigma)
                same = _element_idx(u, ctx, s) == rec[s]
                yield f"{u.value} {w} {sigma}", fixed and lower and same


def _uniqueness(max_n):
    rng = random.Random(11)
    pool = [(u, w) for w in _weights(min(max_n, 5), 3) for u in UParam if len(parabolic_context(w)) > 2]
    for u, w in rng.sample(pool, min(10, len(pool))):
        ctx = parabolic_context(w)
        sigma = ctx.reps[-1]
        el = kl_element(u, ctx, sigma)
        tau = rng.choice([t for t in ctx.reps if t != sigma])
        bumped = el.vector + HeckeVector(ctx, {tau: LaurentPoly.monomial(-1)})
        yield f"{u.value} {w} {tau}", bar_vector(u, bumped) != bumped


def _bruhat(max_n):
    for n in range(1, min(max_n, 4) + 1):
        perms = all_permutations(n)
        for y, w in itertools.product(perms, repeat=2):
            yield f"{y} <= {w}", bruhat_leq(y, w) == subword_leq(y, w)


def _length_identity(max_n):
    for w in _weights(min(max_n, 8)):
        ctx = parabolic_context(w)
        top = inversions(ctx.base)
        seen = set()
        for sigma in ctx.reps:
            seen.add(sigma.act(ctx.base))
            yield f"{w} {sigma}", sigma.length == top - inversions(sigma.act(ctx.base))
        yield f"{w} bijective", len(seen) == len(ctx.seqs) == len(set(ctx.seqs))


def _descent_lemma(max_n):
    for w in _weights(min(max_n, 6)):
        ctx = parabolic_context(w)
        for sigma in ctx.reps:
            seq = sigma.act(ctx.base)
            for i in range(1, ctx.n):
                a, b = seq[i - 1], seq[i]
                s_sigma = Permutation.simple(i, ctx.n) * sigma
                up = (s_sigma.length > sigma.length) == (a >= b)
                inside = ctx.contains(s_sigma) == (a != b)
                yield f"{w} {sigma} s{i}", up and inside


def _tensor_relations(max_n):
    """Quadratic and braid relations of the tensor Hecke action, and commutation with generators."""
    rng = random.Random(3)
    for k in (2, 3):
        for n in range(2, min(max_n, 4) + 1):
            for seq in itertools.product(range(1, k + 1), repeat=n):
                x = TensorVector.basis(k, seq)
                for comult in ComultChoice:
                    T = lambda i, y: hecke_on_tensor(comult, i, y)
                    for i in range(1, n):
                        tx = T(i, x)
                        quad = T(i, tx) + tx - tx.scale(V_INV2) - x.scale(V_INV2)
                        yield f"{comult.name} quadratic {seq} {i}", not quad.coeffs
                        yield (f"{comult.name} inverse {seq} {i}",
                               braiding_inverse(comult, i, braiding(comult, i, x)) == x)
                        if i < n - 1:
                            yield (f"{comult.name} braid {seq} {i}",
                                   T(i, T(i + 1, T(i, x))) == T(i + 1, T(i, T(i + 1, x))))
                        gen = rng.choice("EFK")
                        g = rng.randint(1, k - 1)
                        yield (f"{comult.name} {gen}{g} commutes {seq} {i}",
                               generator_action(gen, g, comult, T(i, x)) == T(i, generator_action(gen, g, comult, x)))


def _psi(max_n):
    for k in (2, 3):
        for n in range(1, min(max_n, 4) + 1):
            for seq in itertools.product(range(1, k + 1), repeat=n):
                x = TensorVector.basis(k, seq)
                for comult in ComultChoice:
                    px = psi(comult, x)
                    yield f"{comult.name} psi^2 {seq}", psi(comult, px) == x
                    for i in range(1, n):
                        lhs = psi(comult, braiding(comult, i, x))
                        rhs = braiding_inverse(comult, i, px)
                        yield f"{comult.name} psi B {seq} {i}", lhs == rhs


def suite_hecke(max_n: int) -> list[CheckResult]:
    return [
        _run("quadratic relation on M", _quadratic(max_n)),
        _run("braid and commuting relations on M", _braid(max_n)),
        _run("T along a reduced word gives v^-l m_sigma", _standard_generation(max_n)),
        _run("bar involution squares to identity", _bar_involution(max_n)),
        _run("bar_basis independent of reduced word", _reduced_word_independence(max_n)),
        _run("KL elements bar-fixed, lower terms negative, solve = recursion", _kl_properties(max_n)),
        _run("perturbed KL elements are not bar-fixed", _uniqueness(max_n)),
        _run("Bruhat order agrees with subword criterion", _bruhat(max_n)),
        _run("length equals inversion drop; sequences biject with W^J", _length_identity(max_n)),
        _run("descent lemma for coset representatives", _descent_lemma(max_n)),
        _run("tensor Hecke relations and commutation", _tensor_relations(max_n)),
        _run("psi involution and psi B = B^-1 psi", _psi(max_n)),
    ]


# -- duality --------------------------------------------------------------------

def _duality(k: int, max_n: int):
    for n in range(1, max_n + 1):
        words = list(itertools.product(range(1, k + 1), repeat=n))
        dual = {I: dual_canonical_basis(k, I) for I in words}
        canon = {I: canonical_basis(k, I) for I in words}
        for I in words:
            for Ip in words:
                if sorted(I) != sorted(Ip):
                    continue
                want = ONE if I == Ip[::-1] else LaurentPoly()
                yield f"<b^{I}, b_{Ip}>", pairing(dual[I], canon[Ip]) == want


def suite_duality(max_n: int) -> list[CheckResult]:
    return [
        _run("pairing of dual and canonical bases, k=2", _duality(2, min(max_n, 8))),
        _run("pairing of dual and canonical bases, k=3", _duality(3, min(max_n, 5))),
    ]


# -- routes ---------------------------------------------------------------------

def _sl2_routes(max_n):
    for I in _words(max_n):
        yield f"canonical {I}", canonical_sl2(I) == canonical_basis(2, I)
        yield f"dual {I}", dual_canonical_sl2(I) == dual_canonical_basis(2, I)


def _direct_routes(max_n):
    for k in (2, 3):
        for I in _words(min(max_n, 5), k):
            yield f"canonical k={k} {I}", canonical_basis(k, I) == canonical_basis_direct(k, I)
            yield f"dual k={k} {I}", dual_canonical_basis(k, I) == dual_canonical_basis_direct(k, I)


def _zero_weight(max_n):
    for n in range(1, min(max_n, 4) + 1):
        base = tuple(range(n, 0, -1))
        perms = all_permutations(n)
        for w in perms:
            b = canonical_basis(n, w.act(base))
            d = dual_canonical_basis(n, w.act(base))
            for y in perms:
                p = classical_kl(y, w).to_laurent().bar() if bruhat_leq(y, w) else LaurentPoly()
                e = y.length - w.length
                sign = -1 if e % 2 else 1
                yield f"b_{w} at {y}", b.coefficient(y.act(base)) == p.shift(e)
                yield f"b^{w} at {y}", d.coefficient(y.act(base)) == p.shift(e) * sign


def _choices(max_n):
    pickers = [("last", lambda xs: xs[-1]), ("random", random.Random(5).choice)]
    for I in _words(min(max_n, 8)):
        b, d = canonical_sl2(I), dual_canonical_sl2(I)
        for name, pick in pickers:
            yield f"canonical {name} {I}", canonical_sl2(I, pick) == b
            yield f"dual {name} {I}", dual_canonical_sl2(I, pick) == d


def _jones_wenzl(max_n):
    rng = random.Random(13)
    for n in range(1, min(max_n, 6) + 1):
        for I in itertools.product((1, 2), repeat=n):
            x = TensorVector.basis(2, I)
            i = rng.randint(1, n)
            j = rng.randint(i, n)
            p = jones_wenzl(i, j, x)
            yield f"p^2 = p {I} [{i},{j}]", jones_wenzl(i, j, p) == p
            p_full = jones_wenzl(1, n, x)
            for gen in "EFK":
                lhs = jones_wenzl(1, n, generator_action(gen, 1, ComultChoice.STANDARD, x))
                yield f"p {gen} = {gen} p {I}", lhs == generator_action(gen, 1, ComultChoice.STANDARD, p_full)


def _dual_monomial(max_n):
    for I in _words(max_n):
        d = dual_canonical_sl2(I)
        yield f"{I}", all(c.is_monomial() and abs(c.terms[c.min_degree()]) == 1 for c in d.coeffs.values())


def suite_routes(max_n: int) -> list[CheckResult]:
    return [
        _run("sl2 constructions equal transported bases", _sl2_routes(max_n)),
        _run("transported bases equal direct psi-fixed solves", _direct_routes(max_n)),
        _run("zero weight expansions via classical KL polynomials", _zero_weight(max_n)),
        _run("junction and insertion choices give the same vector", _choices(max_n)),
        _run("Jones-Wenzl idempotence and commutation", _jones_wenzl(max_n)),
        _run("dual canonical coefficients are signed monomials", _dual_monomial(max_n)),
    ]


# -- deodhar --------------------------------------------------------------------

def _deodhar(max_n):
    for w in _weights(min(max_n, 5)):
        ctx = parabolic_context(w)
        for tau, sigma in itertools.product(ctx.reps, repeat=2):
            yield f"{w} {tau} {sigma}", check_deodhar(ctx, tau, sigma).ok


def suite_deodhar(max_n: int) -> list[CheckResult]:
    return [_run("parabolic vs ordinary KL identities, both u", _deodhar(max_n))]


# -- grassmann ------------------------------------------------------------------

def _same_weight_pairs(max_n):
    for n in range(1, max_n + 1):
        for plus in range(n + 1):
            words = [tuple(1 if p in ps else 2 for p in range(n)) for ps in itertools.combinations(range(n), plus)]
            for I in words:
                yield I, words


def _grassmann_route(max_n):
    for I, words in _same_weight_pairs(max_n):
        b = canonical_sl2(I)
        for J in words:
            yield f"c({I},{J})", coefficient_c(I, J) == b.coefficient(J)


def _recursion(max_n):
    for I, words in _same_weight_pairs(max_n):
        for J in words:
            yield f"c0 recursion {I},{J}", recursion_check(I, J)


def _monomial_kl(max_n):
    for n in range(1, max_n + 1):
        for m1 in range(1, n):
            ctx = parabolic_context((m1, n - m1))
            for s in range(len(ctx)):
                for t, alpha in _element_idx(UParam.V_MINUS_2, ctx, s).items():
                    p = parabolic_kl(UParam.V_MINUS_2, ctx, ctx.reps[t], ctx.reps[s])
                    yield f"({m1},{n - m1}) {ctx.reps[t]} {ctx.reps[s]}", p.is_power_of_q()


def _kl_chain(max_n):
    for n in range(1, min(max_n, 8) + 1):
        for m1 in range(n + 1):
            w = (m1, n - m1)
            ctx = parabolic_context(w)
            base = i0(w)
            for sigma, tau in itertools.product(ctx.reps, repeat=2):
                p = parabolic_kl(UParam.MINUS_ONE, ctx, tau, sigma).to_laurent()
                want = p.bar().shift(tau.length - sigma.length)
                yield f"{w} {tau} {sigma}", coefficient_c(sigma.act(base), tau.act(base)) == want


def suite_grassmann(max_n: int) -> list[CheckResult]:
    return [
        _run("local recursion equals canonical basis coefficients", _grassmann_route(max_n)),
        _run("normalized recursion consistent with h", _recursion(max_n)),
        _run("maximal parabolic KL polynomials (u = v^-2) are monomials", _monomial_kl(max_n)),
        _run("coefficients equal parabolic KL polynomials (u = -1)", _kl_chain(max_n)),
    ]


SUITES: dict[str, Callable[[int], list[CheckResult]]] = {
    "hecke": suite_hecke,
    "duality": suite_duality,
    "routes": suite_routes,
    "deodhar": suite_deodhar,
    "grassmann": suite_grassmann,
}


def run_suite(name: str, max_n: int = 6) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SuiteReport(name, max_n, SUITES[name](max_n))


def run_all(max_n: int = 6) -> list[SuiteReport]:
    return [run_suite(name, max_n) for name in SUITES]
