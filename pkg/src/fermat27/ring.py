"""Exact arithmetic in the cyclotomic field Q(w), w a primitive sixth root of unity.

Elements are stored as a + b*w with rational a, b and w**2 = w - 1.  In this
basis the cube roots of -1 are the pure powers w, w**3 = -1 and w**5, which
is the only kind of root the line formulas ever exponentiate.

Rationals are :class:`fractions.Fraction` values; they are always reduced, so
two elements are equal iff their coordinates are equal.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

__all__ = [
    "Eisenstein",
    "RootOfMinusOne",
    "omega_power",
    "embed_complex",
    "ZERO",
    "ONE",
    "OMEGA",
]

# w = exp(i*pi/3); fixed once so numeric output is reproducible
_OMEGA_COMPLEX = cmath.exp(1j * math.pi / 3)


def _rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Eisenstein:
    """Element a + b*w of Q(w), w**2 - w + 1 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _rational(a)
        self.b = _rational(b)

    @classmethod
    def _make(cls, a, b):
        # trusted constructor, skips coercion
        x = object.__new__(cls)
        x.a = a
        x.b = b
        return x

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._make(Fraction(x), Fraction(0))
        return NotImplemented

    def __repr__(self):
        return f"Eisenstein({self.a!s}, {self.b!s})"

    def __str__(self):
        return f"{self.a} + {self.b}*w"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: parse ``"a + b*w"``."""
        head, sep, tail = text.partition(" + ")
        if not sep or not tail.endswith("*w"):
            raise ValueError(f"not an Eisenstein literal: {text!r}")
        return cls(Fraction(head.strip()), Fraction(tail[:-2].strip()))

    def __eq__(self, other):
        other = Eisenstein.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __neg__(self):
        return Eisenstein._make(-self.a, -self.b)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = Eisenstein.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein._make(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = Eisenstein.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Eisenstein._make(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = Eisenstein.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return Eisenstein._make(a * c - bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def scale(self, r):
        """Multiply by a rational."""
        return Eisenstein._make(self.a * r, self.b * r)

    def conjugate(self):
        # complex conjugation sends w to w**5 = 1 - w
        return Eisenstein._make(self.a + self.b, -self.b)

    def norm(self):
        """Field norm a**2 + a*b + b**2; zero only for zero."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return Eisenstein._make(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = Eisenstein.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Eisenstein.coerce(other) * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)

_POWERS = (
    Eisenstein(1, 0),
    Eisenstein(0, 1),
    Eisenstein(-1, 1),
    Eisenstein(-1, 0),
    Eisenstein(0, -1),
    Eisenstein(1, -1),
)


def omega_power(e):
    """Return w**e, reduced mod 6."""
    return _POWERS[e % 6]


class RootOfMinusOne:
    """A cube root of -1, stored as the exponent e in {1, 3, 5} of w**e."""

    __slots__ = ("exponent",)

    def __init__(self, exponent):
        if exponent not in (1, 3, 5):
            raise ValueError(f"w**{exponent} is not a cube root of -1")
        self.exponent = exponent

    @property
    def value(self):
        return omega_power(self.exponent)

    def power(self, k):
        """Value of (w**exponent)**k."""
        return omega_power(self.exponent * k)

    def conjugate(self):
        return RootOfMinusOne(6 - self.exponent)

    def __eq__(self, other):
        if isinstance(other, RootOfMinusOne):
            return self.exponent == other.exponent
        return NotImplemented

    def __hash__(self):
        return hash(("RootOfMinusOne", self.exponent))

    def __repr__(self):
        return f"RootOfMinusOne({self.exponent})"


def embed_complex(x, precision=53):
    """Complex value of x under w -> exp(i*pi/3).

    ``precision`` is in bits.  Up to 53 a Python ``complex`` is returned;
    above that an :class:`mpmath.mpc` at the requested working precision.
    """
    x = Eisenstein.coerce(x)
    if precision <= 53:
        return float(x.a) + float(x.b) * _OMEGA_COMPLEX
    import mpmath

    with mpmath.workprec(precision):
        w = mpmath.expjpi(mpmath.mpf(1) / 3)
        a = mpmath.mpf(x.a.numerator) / x.a.denominator
        b = mpmath.mpf(x.b.numerator) / x.b.denominator
        return +(a + b * w)

