"""Exact rational polynomials, Pochhammer symbols and epsilon-perturbed
rational functions.

Rationals are :class:`fractions.Fraction`.  Everything here is exact; there is
no floating point except in :meth:`Poly.evalf`, which is the bridge used by the
quadrature code.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ZeroDenominator

__all__ = [
    "Fraction",
    "Poly",
    "EpsPoly",
    "EpsRat",
    "as_rational",
    "rational_str",
    "pochhammer",
    "pochhammer_eps",
    "eps_limit",
]


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction.

    Floats are refused: they usually indicate that a decimal literal slipped
    into what should be an exact computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


def rational_str(q: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    return str(as_rational(q))


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("_c",)
    var = "x"

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "_c", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, a) -> "Poly":
        return cls([a])

    @classmethod
    def monomial(cls, k: int, a=1) -> "Poly":
        return cls([0] * k + [a])

    @classmethod
    def gen(cls) -> "Poly":
        """The polynomial variable itself."""
        return cls([0, 1])

    # -- basic structure ----------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def monic(self) -> "Poly":
        if not self._c:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(1 / self._c[-1])

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (the order of vanishing at 0)."""
        for k, a in enumerate(self._c):
            if a != 0:
                return k
        raise ValueError("valuation of the zero polynomial is undefined")

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _strip([other])
        return NotImplemented

    def __hash__(self):
        return hash((Poly, self._c))

    def __bool__(self):
        return bool(self._c)

    # -- ring operations ----------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-a for a in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return type(self)()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = type(self)([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, a) -> "Poly":
        a = as_rational(a)
        return type(self)([a * c for c in self._c])

    def derivative(self, order: int = 1) -> "Poly":
        c = list(self._c)
        for _ in range(order):
            c = [k * c[k] for k in range(1, len(c))]
        return type(self)(c)

    def reflect(self) -> "Poly":
        """p(x) -> p(-x)."""
        return type(self)([-a if k % 2 else a for k, a in enumerate(self._c)])

    def compose(self, inner: "Poly") -> "Poly":
        """p(inner(x)) by Horner's scheme."""
        out = type(inner)()
        for a in reversed(self._c):
            out = out * inner + a
        return out

    def __call__(self, x0):
        return self.evaluate(x0)

    def evaluate(self, x0) -> Fraction:
        x0 = as_rational(x0)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x0 + a
        return acc

    def evalf(self, x):
        """Float Horner evaluation at a scalar or ndarray ``x``."""
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for a in reversed(self._c):
            acc = acc * x + float(a)
        return acc

    # -- serialization --------------------------------------------------
    def to_json(self) -> str:
        return json.dumps([rational_str(a) for a in self._c])

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls(Fraction(s) for s in json.loads(text))

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k, a in enumerate(self._c):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = rational_str(mag)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
            if not terms:
                terms.append(("-" if a < 0 else "") + body)
            else:
                terms.append(("- " if a < 0 else "+ ") + body)
        return " ".join(terms)

    def __repr__(self):
        return f"{type(self).__name__}([{', '.join(rational_str(a) for a in self._c)}])"


class EpsPoly(Poly):
    """Polynomial in the formal perturbation variable eps."""

    __slots__ = ()
    var = "eps"


class EpsRat:
    """Quotient of two :class:`EpsPoly` objects.

    No cancellation is performed during arithmetic; the only question ever
    asked of an EpsRat is its Laurent leading term at eps = 0, which
    :func:`eps_limit` reads off the valuations of numerator and denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, EpsPoly) else EpsPoly(num.coeffs if isinstance(num, Poly) else [num])
        if den is None:
            den = EpsPoly([1])
        elif not isinstance(den, EpsPoly):
            den = EpsPoly(den.coeffs if isinstance(den, Poly) else [den])
        if den.is_zero():
            raise ZeroDenominator("EpsRat denominator is identically zero")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(other):
        if isinstance(other, EpsRat):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return EpsRat(other)
        return NotImplemented

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return EpsRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return EpsRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def vanishing_order(self) -> int:
        return eps_limit(self)[0]

    def at_zero(self) -> Fraction:
        """Literal value at eps = 0; raises if the denominator vanishes there."""
        d = self.den[0]
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at eps=0")
        return self.num[0] / d

    def __repr__(self):
        return f"EpsRat(({self.num}) / ({self.den}))"


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a(a+1)...(a+n-1); 1 for n = 0.

    Works for anything supporting ``+ int`` and ``*``, though callers pass
    Fractions.
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = Fraction(1) if isinstance(a, (int, Fraction)) else 1
    for k in range(n):
        out = out * (a + k)
    return out


def pochhammer_eps(a, s, n: int) -> EpsPoly:
    """(a + s*eps)_n expanded as a polynomial in eps."""
    a, s = as_rational(a), as_rational(s)
    out = EpsPoly([1])
    for k in range(n):
        out = out * EpsPoly([a + k, s])
    return out


def eps_limit(r: EpsRat) -> tuple[int, Fraction]:
    """Laurent leading term of ``r`` at eps = 0.

    Returns ``(k, a)`` with ``r(eps) = a*eps**k + O(eps**(k+1))``.  For k = 0
    this is the ordinary limit.  The zero function returns ``(0, 0)``.
    """
    if r.den.is_zero():
        raise ZeroDenominator("EpsRat denominator is identically zero")
    if r.num.is_zero():
        return 0, Fraction(0)
    kn, kd = r.num.valuation(), r.den.valuation()
    return kn - kd, r.num[kn] / r.den[kd]


def polys_to_json(polys: Sequence[Poly]) -> list[list[str]]:
    return [[rational_str(a) for a in p.coeffs] for p in polys]
