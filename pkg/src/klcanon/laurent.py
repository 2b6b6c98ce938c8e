"""
Exact integer Laurent polynomials in ``v``, the bar involution ``v -> v^-1``,
balanced quantum integers and binomials, and reduced rational functions.

>>> v = LaurentPoly.v()
>>> str((v + 1) * (v - 1))
'v^2 - 1'
>>> str(gauss_binomial(2, 1))
'v + v^-1'
>>> str(bar(v + 3))
'3 + v^-1'
"""
from __future__ import annotations

import functools
import math
from typing import Iterable, Mapping, Union

from .errors import BarAsymmetryError, DenominatorError

__all__ = [
    "LaurentPoly", "RationalFunction", "QPolynomial",
    "bar", "split_negative", "quantum_integer", "quantum_factorial", "gauss_binomial",
    "as_rational", "simplify",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """
    A Laurent polynomial with integer coefficients, stored sparsely as
    ``{exponent: coefficient}`` with no zero coefficients.

    Instances are immutable and hashable.

    >>> LaurentPoly({-1: 1, 0: 3})
    LaurentPoly('3 + v^-1')
    >>> LaurentPoly({2: 0})
    LaurentPoly('0')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def v(cls) -> LaurentPoly:
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def evaluate(self, x):
        """Evaluate at a number; ``x`` may be a Fraction for negative exponents."""
        return sum(c * x**e for e, c in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return LaurentPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (f, d), = a.items()
            return LaurentPoly._raw({e + f: c * d for e, c in b.items()})
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def __truediv__(self, other):
        return RationalFunction(self, other)

    def __rtruediv__(self, other):
        return RationalFunction(other, self)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): self._terms[e] for e in sorted(self._terms)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        return format_terms(self._terms, "v")

    def __repr__(self):
        return f"LaurentPoly('{self}')"


def format_terms(terms: Mapping[int, int], var: str, scale: int = 1) -> str:
    """Render ``{exp: coeff}`` as ``var^e`` terms in decreasing exponent order."""
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        ee = e * scale
        if ee == 0:
            body = str(a)
        else:
            mono = var if ee == 1 else f"{var}^{ee}"
            body = mono if a == 1 else f"{a}{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_ZERO = LaurentPoly._raw({})
_ONE = LaurentPoly._raw({0: 1})


def bar(f: Scalar) -> LaurentPoly:
    """The involution ``f(v) -> f(v^-1)``."""
    return LaurentPoly.coerce(f).bar()


def split_negative(f: LaurentPoly) -> LaurentPoly:
    """
    Return the unique ``g`` supported in negative degrees with ``g - bar(g) == f``.

    >>> v = LaurentPoly.v()
    >>> split_negative(v - v**-1)
    LaurentPoly('-v^-1')
    """
    terms = f._terms
    for e, c in terms.items():
        if terms.get(-e, 0) != -c:
            raise BarAsymmetryError(f"bar(f) != -f for f = {f}")
    return LaurentPoly._raw({e: c for e, c in terms.items() if e < 0})


@functools.lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """``[n] = (v^n - v^-n) / (v - v^-1)``; defined for all integers, ``[-n] = -[n]``."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly._raw({e: 1 for e in range(-(n - 1), n, 2)})


@functools.lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = _ONE
    for i in range(2, n + 1):
        out = out * quantum_integer(i)
    return out


@functools.lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int) -> LaurentPoly:
    """
    Balanced quantum binomial ``[n]! / ([k]! [n-k]!)``, zero unless ``0 <= k <= n``.

    >>> str(gauss_binomial(4, 2))
    'v^4 + v^2 + 2 + v^-2 + v^-4'
    """
    if n < 0:
        raise ValueError("gauss_binomial requires n >= 0")
    if k < 0 or k > n:
        return _ZERO
    if k == 0 or k == n:
        return _ONE
    return gauss_binomial(n - 1, k).shift(k) + gauss_binomial(n - 1, k - 1).shift(k - n)


# -- dense polynomial helpers over Z (coefficient lists, low degree first) --

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(p: list[int]) -> list[int]:
    g = _content(p)
    if g > 1:
        p = [c // g for c in p]
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + da - db] -= la * c
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    if not a:
        return _primitive(b) if b else []
    if not b:
        return _primitive(a)
    g = math.gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return [g * c for c in _primitive(a)]


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        t = c // lb
        q[i - db] = t
        for j, bc in enumerate(b):
            a[i - db + j] -= t * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _to_dense(f: LaurentPoly) -> tuple[int, list[int]]:
    """Split f = v^shift * p with p a polynomial having nonzero constant term."""
    lo = min(f._terms)
    hi = max(f._terms)
    p = [0] * (hi - lo + 1)
    for e, c in f._terms.items():
        p[e - lo] = c
    return lo, p


def _from_dense(shift: int, p: list[int]) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: c for i, c in enumerate(p) if c})


class RationalFunction:
    """
    A quotient of Laurent polynomials in canonical reduced form: the
    denominator is a genuine polynomial with nonzero constant term and a
    positive leading coefficient, coprime to the numerator in ``Z[v]``.

    >>> v = LaurentPoly.v()
    >>> RationalFunction(v**2 - 1, v - 1)
    RationalFunction('v + 1', '1')
    >>> RationalFunction(LaurentPoly.const(2), LaurentPoly.const(4))
    RationalFunction('1', '2')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar, den: Scalar = 1, *, _reduced: bool = False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        self._hash = None
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
            return
        ns, np_ = _to_dense(num)
        ds, dp = _to_dense(den)
        g = _poly_gcd(np_, dp)
        if len(g) > 1 or g[0] != 1:
            np_ = _exact_div(np_, g)
            dp = _exact_div(dp, g)
        if dp[-1] < 0:
            np_ = [-c for c in np_]
            dp = [-c for c in dp]
        self.num = _from_dense(ns - ds, np_)
        self.den = _from_dense(0, dp)

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(LaurentPoly.coerce(x), _ONE, _reduced=True)

    def is_laurent(self) -> bool:
        return self.den == 1

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise DenominatorError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentPoly.coerce(other)
            if other.is_zero():
                return self
            return RationalFunction(self.num + other * self.den, self.den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly, RationalFunction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return RationalFunction(self.num * other, self.den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return RationalFunction(self.num, self.den * other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def bar(self) -> RationalFunction:
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.den == 1 and self.num == other
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den == 1 else hash((self.num, self.den))
        return self._hash

    def to_json(self) -> dict:
        if self.is_laurent():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction('{self.num}', '{self.den}')"


def as_rational(x) -> RationalFunction:
    return RationalFunction.coerce(x)


def simplify(x):
    """Collapse a denominator-free RationalFunction to its LaurentPoly numerator."""
    if isinstance(x, RationalFunction) and x.is_laurent():
        return x.num
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return x


class QPolynomial:
    """
    An element of ``Z[q]``; converts to ``Z[v, v^-1]`` through ``q = v^-2``.

    >>> QPolynomial({0: 1, 1: 1}).to_laurent()
    LaurentPoly('1 + v^-2')
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        if any(e < 0 for e in terms):
            raise ValueError("QPolynomial exponents must be nonnegative")
        self._terms = terms

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> QPolynomial:
        out = {}
        for e, c in f.items():
            if e > 0 or e % 2:
                raise ValueError(f"{f} is not a polynomial in q = v^-2")
            out[-e // 2] = c
        return cls(out)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly({-2 * e: c for e, c in self._terms.items()})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_power_of_q(self) -> bool:
        """True for ``q^j`` with coefficient exactly 1."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def degree(self) -> int:
        return max(self._terms) if self._terms else -1

    def evaluate(self, q):
        return sum(c * q**e for e, c in self._terms.items())

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def to_json(self) -> dict[str, int]:
        return {str(e): self._terms[e] for e in sorted(self._terms)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> QPolynomial:
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        return format_terms(self._terms, "q")

    def __repr__(self):
        return f"QPolynomial('{self}')"


def laurent_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly._raw({e: c for e, c in out.items() if c})
