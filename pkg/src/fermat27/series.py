"""Sparse truncated power series over Q(w) in the twenty cubic deformation parameters.

The parameters t_alpha are indexed by the cubic monomials x^alpha in x0..x3,
ordered by descending lexicographic order of the exponent vector: position 0
is x0**3, position 19 is x3**3.  A multi-index ``a`` is a tuple of 20
non-negative integers, ``a[p]`` being the exponent of the parameter at
position ``p``.

A :class:`Series` holds the terms of total degree at most its ``order``;
every arithmetic operation discards higher terms immediately.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .ring import Eisenstein, embed_complex

__all__ = [
    "DEFORMATION_INDEX",
    "NPARAMS",
    "ZERO_INDEX",
    "Series",
    "OrderMismatchError",
    "NonUnitError",
    "parameter_position",
    "degree",
    "factorial",
    "star",
    "unit_index",
    "multi_indices",
    "monomial_str",
]

DEFORMATION_INDEX = tuple(
    sorted(
        (alpha for alpha in itertools.product(range(4), repeat=4) if sum(alpha) == 3),
        reverse=True,
    )
)
NPARAMS = len(DEFORMATION_INDEX)
ZERO_INDEX = (0,) * NPARAMS

_POSITION = {alpha: p for p, alpha in enumerate(DEFORMATION_INDEX)}


class OrderMismatchError(ValueError):
    pass


class NonUnitError(ArithmeticError):
    """Raised when inverting a series whose constant term is zero."""


def parameter_position(alpha):
    """Position in the canonical order of the exponent vector ``alpha``."""
    try:
        return _POSITION[tuple(alpha)]
    except KeyError:
        raise ValueError(f"{alpha!r} is not the exponent of a cubic monomial") from None


def degree(a):
    return sum(a)


def factorial(a):
    r = 1
    for e in a:
        if e > 1:
            r *= math.factorial(e)
    return r


def star(a):
    """The exponent 4-vector sum_alpha a_alpha * alpha."""
    v = [0, 0, 0, 0]
    for p, e in enumerate(a):
        if e:
            alpha = DEFORMATION_INDEX[p]
            for q in range(4):
                v[q] += e * alpha[q]
    return tuple(v)


def unit_index(p, e=1):
    a = [0] * NPARAMS
    a[p] = e
    return tuple(a)


def multi_indices(active, order):
    """All multi-indices supported on ``active`` with total degree <= ``order``.

    Yielded in graded order; within one degree the order follows
    ``itertools.combinations_with_replacement`` over the sorted active set.
    """
    active = sorted(set(active))
    for d in range(order + 1):
        for combo in itertools.combinations_with_replacement(active, d):
            a = [0] * NPARAMS
            for p in combo:
                a[p] += 1
            yield tuple(a)


def monomial_str(a):
    parts = []
    for p, e in enumerate(a):
        if e == 1:
            parts.append(f"t[{p}]")
        elif e:
            parts.append(f"t[{p}]^{e}")
    return "*".join(parts)


def _sort_key(a):
    # graded, then descending lex so that t[0] sorts before t[1]
    return (sum(a), tuple(-e for e in a))


class Series:
    """Truncated power series: a map multi-index -> Eisenstein, degrees <= order."""

    __slots__ = ("order", "terms", "_graded")

    def __init__(self, order, terms=None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        clean = {}
        if terms:
            for a, c in terms.items():
                a = tuple(a)
                if len(a) != NPARAMS:
                    raise ValueError(f"multi-index must have {NPARAMS} entries")
                if min(a) < 0:
                    raise ValueError("multi-index entries must be non-negative")
                c = Eisenstein.coerce(c)
                if c is NotImplemented:
                    raise TypeError("series coefficients must be exact")
                if c and sum(a) <= order:
                    clean[a] = c
        self.terms = clean
        self._graded = None

    @classmethod
    def _from_clean(cls, order, terms):
        s = object.__new__(cls)
        s.order = order
        s.terms = terms
        s._graded = None
        return s

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls._from_clean(order, {})

    @classmethod
    def constant(cls, c, order):
        c = Eisenstein.coerce(c)
        return cls._from_clean(order, {ZERO_INDEX: c} if c else {})

    @classmethod
    def one(cls, order):
        return cls.constant(1, order)

    @classmethod
    def variable(cls, p, order, active=None):
        """The parameter t_p; the zero series if ``p`` is not active."""
        if active is not None and p not in active:
            return cls.zero(order)
        if order < 1:
            return cls.zero(order)
        return cls._from_clean(order, {unit_index(p): Eisenstein(1)})

    # -- structure -----------------------------------------------------

    def _by_degree(self):
        if self._graded is None:
            g = [[] for _ in range(self.order + 1)]
            for a, c in self.terms.items():
                g[sum(a)].append((a, c))
            self._graded = g
        return self._graded

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, a):
        return self.terms.get(tuple(a), Eisenstein(0))

    def constant_term(self):
        return self.coefficient(ZERO_INDEX)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _sort_key(item[0]))

    def support(self):
        """Positions of parameters that occur in some term."""
        return sorted({p for a in self.terms for p, e in enumerate(a) if e})

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatchError("cannot truncate to a higher order; use with_order")
        return Series._from_clean(order, {a: c for a, c in self.terms.items() if sum(a) <= order})

    def with_order(self, order):
        """Same terms, read at another truncation order (dropping terms above it)."""
        if order >= self.order:
            return Series._from_clean(order, dict(self.terms))
        return self.truncate(order)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Series):
            if isinstance(other, (int, Fraction, Eisenstein)):
                return Series.constant(other, self.order)
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} != {other.order}")
        return other

    def __neg__(self):
        return Series._from_clean(self.order, {a: -c for a, c in self.terms.items()})

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for a, c in other.terms.items():
            s = terms.get(a)
            if s is None:
                terms[a] = c
            else:
                s = s + c
                if s:
                    terms[a] = s
                else:
                    del terms[a]
        return Series._from_clean(self.order, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply every coefficient by the scalar ``c``."""
        c = Eisenstein.coerce(c)
        if not c:
            return Series.zero(self.order)
        return Series._from_clean(self.order, {a: x * c for a, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Eisenstein)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        N = self.order
        if not self.terms or not other.terms:
            return Series.zero(N)
        g1, g2 = self._by_degree(), other._by_degree()
        acc = {}
        for d1 in range(N + 1):
            row1 = g1[d1]
            if not row1:
                continue
            for d2 in range(N - d1 + 1):
                row2 = g2[d2]
                if not row2:
                    continue
                for a, x in row1:
                    xa, xb = x.a, x.b
                    for b, y in row2:
                        key = tuple(map(int.__add__, a, b))
                        ya, yb = y.a, y.b
                        bd = xb * yb
                        ra = xa * ya - bd
                        rb = xa * yb + xb * ya + bd
                        prev = acc.get(key)
                        if prev is None:
                            acc[key] = [ra, rb]
                        else:
                            prev[0] += ra
                            prev[1] += rb
        terms = {}
        for key, (ra, rb) in acc.items():
            if ra or rb:
                terms[key] = Eisenstein._make(ra, rb)
        return Series._from_clean(N, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse_unit(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.constant_term()
        if not c0:
            raise NonUnitError("constant term is zero; series is not a unit")
        N = self.order
        u = c0.inverse()
        g = self._by_degree()
        # result graded pieces: r_d = -u * sum_{k=1..d} s_k * r_{d-k}
        result = [{ZERO_INDEX: u}]
        for d in range(1, N + 1):
            acc = {}
            for k in range(1, d + 1):
                for a, x in g[k]:
                    for b, y in result[d - k].items():
                        key = tuple(map(int.__add__, a, b))
                        acc[key] = acc.get(key, 0) + x * y
            piece = {}
            for key, val in acc.items():
                val = -(u * val)
                if val:
                    piece[key] = val
            result.append(piece)
        terms = {}
        for piece in result:
            terms.update(piece)
        return Series._from_clean(N, terms)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Eisenstein)):
            return self.scale(Eisenstein.coerce(other).inverse())
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse_unit()

    def times_variable(self, p):
        """Multiply by the parameter t_p (a shift of the exponent at ``p``)."""
        N = self.order
        terms = {}
        for a, c in self.terms.items():
            if sum(a) < N:
                b = list(a)
                b[p] += 1
                terms[tuple(b)] = c
        return Series._from_clean(N, terms)

    def conjugate(self):
        return Series._from_clean(self.order, {a: c.conjugate() for a, c in self.terms.items()})

    # -- evaluation and I/O -------------------------------------------

    def evaluate(self, assignment):
        """Complex value at ``{position: complex}``; missing positions read as 0."""
        total = 0j
        for a, c in self.terms.items():
            v = embed_complex(c)
            for p, e in enumerate(a):
                if e:
                    t = assignment.get(p, 0.0)
                    if t == 0:
                        v = 0j
                        break
                    v *= t**e
            total += v
        return total

    def __repr__(self):
        return f"Series(order={self.order}, terms={len(self.terms)})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for a, c in self.sorted_terms():
            mono = monomial_str(a)
            out.append(f"({c}) * {mono}" if mono else f"({c})")
        return " + ".join(out)

    def to_json(self):
        return [
            {"exponents": list(a), "a": str(c.a), "b": str(c.b)}
            for a, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data, order):
        terms = {}
        for item in data:
            a = tuple(int(e) for e in item["exponents"])
            terms[a] = Eisenstein(Fraction(item["a"]), Fraction(item["b"]))
        return cls(order, terms)
