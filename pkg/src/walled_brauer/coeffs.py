"""Coefficient rings: ℤ[x] / ℚ[x] polynomials and ℚ(x) rational functions.

Polynomials are stored as tuples of ascending coefficients with no trailing
zeros.  Arithmetic accepts plain ints and Fractions, and :func:`normalize`
collapses constant polynomials to plain numbers, so most coefficients in
practice are ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Union

import sympy

Number = Union[int, Fraction]


def _trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(a) if isinstance(a, Fraction) and a.denominator == 1 else a for a in c)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(list(self.coeffs)))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: Number, k: int) -> "Poly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value):
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def _wrap(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return normalize(Poly(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Poly):
            return normalize(Poly(tuple(c * other for c in self.coeffs)))
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return 0
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return normalize(Poly(tuple(out)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return normalize(Poly(tuple(Fraction(c) / other for c in self.coeffs)))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        return poly_str(self)


Coeff = Union[int, Fraction, Poly]


def normalize(c):
    """Constant polynomials become numbers; integral Fractions become ints."""
    if isinstance(c, Poly):
        if len(c.coeffs) == 0:
            return 0
        if len(c.coeffs) == 1:
            return c.coeffs[0]
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def coeff_list(c) -> list:
    """Ascending coefficient list of a coefficient."""
    c = normalize(c)
    if isinstance(c, Poly):
        return list(c.coeffs)
    return [c] if c != 0 else []


def from_list(values) -> Coeff:
    return normalize(Poly(tuple(values)))


def evaluate(c, n) -> Number:
    if isinstance(c, Poly):
        return c(n)
    return c


def is_integral(c) -> bool:
    return all(isinstance(a, int) for a in coeff_list(c))


def poly_str(c) -> str:
    cl = coeff_list(c)
    if not cl:
        return "0"
    parts = []
    for k, a in enumerate(cl):
        if a == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and a == 1:
            parts.append(mono)
        elif mono and a == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{a}{'*' + mono if mono else ''}")
    return " + ".join(reversed(parts)).replace("+ -", "- ")


# -- ℚ(x) via sympy's fraction field ----------------------------------------

_X = sympy.Symbol("x")
QQX = sympy.QQ.frac_field(_X)


def to_field(c):
    """Embed a coefficient into ℚ(x)."""
    cl = coeff_list(c)
    return QQX.from_sympy(sum((sympy.Rational(a.numerator, a.denominator) if isinstance(a, Fraction) else sympy.Integer(a)) * _X**k for k, a in enumerate(cl)))


@dataclass(frozen=True)
class RatFunc:
    """Normalized ``num/den`` with integer polynomials, positive leading denominator."""

    num: tuple
    den: tuple

    @classmethod
    def from_field(cls, f) -> "RatFunc":
        num, den = sympy.fraction(sympy.cancel(QQX.to_sympy(f)))
        cn = [sympy.Rational(a) for a in sympy.Poly(num, _X, domain=sympy.QQ).all_coeffs()]
        cd = [sympy.Rational(a) for a in sympy.Poly(den, _X, domain=sympy.QQ).all_coeffs()]
        scale = lcm(*[int(a.q) for a in cn + cd])
        cn, cd = [int(a * scale) for a in cn], [int(a * scale) for a in cd]
        g = gcd(*cn, *cd)
        if cd[0] < 0:
            g = -g
        return cls(tuple(reversed([a // g for a in cn])), tuple(reversed([a // g for a in cd])))

    def as_coeff(self) -> Coeff:
        """The polynomial value, if the denominator is a constant dividing everything."""
        if len(self.den) != 1:
            raise ValueError(f"not a polynomial: {self}")
        d = self.den[0]
        return from_list([Fraction(a, d) for a in self.num])

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def __str__(self):
        return f"({poly_str(from_list(self.num))})/({poly_str(from_list(self.den))})"
