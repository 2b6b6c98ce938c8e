import math

import pytest
from hypothesis import given, settings, strategies as st

from klcanon.errors import BarAsymmetryError
from klcanon.laurent import (
    LaurentPoly, QPolynomial, RationalFunction, bar, gauss_binomial, quantum_factorial,
    quantum_integer, simplify, split_negative,
)

v = LaurentPoly.v()
vi = LaurentPoly.monomial(-1)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero = polys.filter(bool)


def test_construction_drops_zeros():
    assert LaurentPoly({1: 0, -2: 3}).terms == {-2: 3}
    assert not LaurentPoly({0: 0})
    assert LaurentPoly.const(0) == 0


def test_rendering_decreasing_exponents():
    assert str(vi + 3) == "3 + v^-1"
    assert str(v ** 2 - 2 * v + 1) == "v^2 - 2v + 1"
    assert str(LaurentPoly()) == "0"
    assert str(-vi) == "-v^-1"


def test_json_round_trip():
    f = v ** 3 - 2 * vi + 5
    assert f.to_json() == {"-1": -2, "0": 5, "3": 1}
    assert LaurentPoly.from_json(f.to_json()) == f


@pytest.mark.parametrize("f, want", [
    (v + 3, vi + 3),
    (LaurentPoly(), LaurentPoly()),
    (v ** 2 - vi ** 2, vi ** 2 - v ** 2),
])
def test_bar_examples(f, want):
    assert bar(f) == want


def test_split_negative_examples():
    assert split_negative(v - vi) == -vi
    assert split_negative(LaurentPoly()) == 0
    with pytest.raises(BarAsymmetryError):
        split_negative(v + vi)


def test_gauss_binomial_examples():
    assert gauss_binomial(2, 1) == v + vi
    assert gauss_binomial(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert gauss_binomial(3, 5) == 0
    assert gauss_binomial(3, -1) == 0


def test_quantum_integers():
    assert quantum_integer(3) == v ** 2 + 1 + vi ** 2
    assert quantum_integer(0) == 0
    assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)


@pytest.mark.parametrize("n", range(13))
def test_binomial_symmetry_and_specialization(n):
    for k in range(n + 1):
        g = gauss_binomial(n, k)
        assert g == gauss_binomial(n, n - k)
        assert g.bar() == g
        assert g.evaluate(1) == math.comb(n, k)


@pytest.mark.parametrize("n", range(1, 13))
def test_pascal_rule(n):
    for k in range(n + 1):
        assert gauss_binomial(n, k) == gauss_binomial(n - 1, k).shift(k) + gauss_binomial(n - 1, k - 1).shift(k - n)


def test_binomial_matches_factorial_quotient():
    for n in range(8):
        for k in range(n + 1):
            quot = RationalFunction(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k))
            assert quot == gauss_binomial(n, k)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0
    assert f * 1 == f and f + 0 == f


@given(polys, polys)
def test_bar_is_ring_involution(f, g):
    assert bar(f * g) == bar(f) * bar(g)
    assert bar(f + g) == bar(f) + bar(g)
    assert bar(bar(f)) == f


@given(st.dictionaries(st.integers(-8, -1), st.integers(-5, 5), max_size=5).map(LaurentPoly))
def test_split_negative_inverts_antisymmetrization(g):
    assert split_negative(g - g.bar()) == g


@given(polys, nonzero, nonzero)
@settings(max_examples=60)
def test_rational_canonical_form(f, g, h):
    assert RationalFunction(f * h, g * h) == RationalFunction(f, g)
    r = RationalFunction(f, g)
    assert r.den.coefficient(0) != 0
    assert r.den.terms[r.den.max_degree()] > 0


@given(polys, nonzero, polys, nonzero)
@settings(max_examples=60)
def test_rational_field_operations(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert x + y - y == x
    assert (x * y) == RationalFunction(a * c, b * d)
    if c:
        assert (x / y) * y == x
    assert x.bar().bar() == x


def test_rational_simplifies_to_laurent():
    r = RationalFunction(v ** 2 - 1, v - 1)
    assert r.is_laurent()
    assert simplify(r) == v + 1
    assert RationalFunction(1, v) == vi
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, 0)


def test_q_polynomials():
    p = QPolynomial({0: 1, 1: 1})
    assert str(p) == "q + 1"
    assert p.to_laurent() == 1 + vi ** 2
    assert QPolynomial.from_laurent(1 + vi ** 2) == p
    assert p.to_json() == {"0": 1, "1": 1}
    assert QPolynomial({3: 1}).is_power_of_q()
    assert not QPolynomial({3: -2}).is_power_of_q()
    assert not QPolynomial().is_power_of_q()
    with pytest.raises(ValueError):
        QPolynomial.from_laurent(v)
