"""Period series, their 2x2 minors, and the 27 line pencils near the Fermat cubic.

For a line label k = ((m, n, l), z1, z2) and a pair (i, j) the period series is

    p_ij = sum_a  z1**bar(v_0 + 1) * z2**bar(v_n + 1) / a!
                  * prod_q <(v_q + 1)/3> * t**a,        v = beta_ij + a*,

summed over the multi-indices a for which both fractional-part conditions

    {(v_0 + 1)/3} + {(v_m + 1)/3} = 1,   {(v_n + 1)/3} + {(v_l + 1)/3} = 1

hold.  The 4x4 matrix (p_ij) has rank two, and its kernel is spanned by the
two linear forms of the line.  These are read off from 2x2 minors of the rows
0 and n.

The pencil formula is written for the label (1, 2, 3); other labels use it
after renaming x1, x2, x3 to x_m, x_n, x_l.  Without the renaming the minors
all vanish at t = 0 when m = 2, because rows 0 and m of the matrix are
proportional there.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ring import Eisenstein, RootOfMinusOne, omega_power
from .series import (
    DEFORMATION_INDEX,
    NPARAMS,
    NonUnitError,
    Series,
    factorial,
    multi_indices,
    star,
    _sort_key,
)

__all__ = [
    "TRIPLES",
    "ALL_PARAMETERS",
    "LineLabel",
    "all_labels",
    "angle",
    "residue_bar",
    "constraint_holds",
    "term_coefficient",
    "reference_terms",
    "enumerate_terms",
    "period_series",
    "PeriodMatrix",
    "period_matrix",
    "LinePencil",
    "line_pencil",
    "FermatLine",
    "fermat_lines",
    "pair_exponent",
    "InconsistencyError",
]

TRIPLES = ((1, 2, 3), (2, 1, 3), (3, 1, 2))
ALL_PARAMETERS = frozenset(range(NPARAMS))


class InconsistencyError(RuntimeError):
    """An identity guaranteed by the theory failed; points to a bug."""


@dataclass(frozen=True)
class LineLabel:
    triple: tuple
    zeta1: RootOfMinusOne
    zeta2: RootOfMinusOne

    def __post_init__(self):
        if tuple(self.triple) not in TRIPLES:
            raise ValueError(f"triple must be one of {TRIPLES}, got {self.triple!r}")
        object.__setattr__(self, "triple", tuple(self.triple))
        for name in ("zeta1", "zeta2"):
            z = getattr(self, name)
            if isinstance(z, int):
                object.__setattr__(self, name, RootOfMinusOne(z))

    @property
    def m(self):
        return self.triple[0]

    @property
    def n(self):
        return self.triple[1]

    @property
    def l(self):  # noqa: E743
        return self.triple[2]

    @property
    def perm(self):
        """(0, m, n, l): where x0, x1, x2, x3 of the (1, 2, 3) formula are sent."""
        return (0,) + self.triple

    @property
    def index(self):
        """Position in the canonical order of :func:`all_labels`."""
        return (
            9 * TRIPLES.index(self.triple)
            + 3 * (self.zeta1.exponent // 2)
            + self.zeta2.exponent // 2
        )

    def conjugate(self):
        return LineLabel(self.triple, self.zeta1.conjugate(), self.zeta2.conjugate())

    def __str__(self):
        m, n, l = self.triple
        return f"(m,n,l)=({m},{n},{l}) z1=w^{self.zeta1.exponent} z2=w^{self.zeta2.exponent}"


def all_labels():
    """The 27 labels: triples, then z1 exponent in (1, 3, 5), then z2 exponent."""
    return [
        LineLabel(triple, RootOfMinusOne(e1), RootOfMinusOne(e2))
        for triple in TRIPLES
        for e1 in (1, 3, 5)
        for e2 in (1, 3, 5)
    ]


def angle(r):
    """(r-1)(r-2)...(r-[r]) for rational r > 0; zero when r is an integer."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("angle bracket is defined for r > 0")
    result = Fraction(1)
    for k in range(1, math.floor(r) + 1):
        result *= r - k
    return result


def residue_bar(n):
    return n % 3


def _pair_ok(x, y):
    # {(x+1)/3} + {(y+1)/3} = 1 iff the residues of x+1, y+1 are {1, 2}
    rx, ry = (x + 1) % 3, (y + 1) % 3
    return rx != 0 and rx + ry == 3


def constraint_holds(v, label):
    m, n, l = label.triple
    return _pair_ok(v[0], v[m]) and _pair_ok(v[n], v[l])


def pair_exponent(i, j):
    beta = [0, 0, 0, 0]
    beta[i] += 1
    beta[j] += 1
    return tuple(beta)


def term_coefficient(a, beta, label):
    """Coefficient of t**a in the period series with exponent vector ``beta``."""
    s = star(a)
    v = [beta[q] + s[q] for q in range(4)]
    r = Fraction(1, factorial(a))
    for q in range(4):
        r *= angle(Fraction(v[q] + 1, 3))
    if not r:
        return Eisenstein(0)
    e = label.zeta1.exponent * residue_bar(v[0] + 1) + label.zeta2.exponent * residue_bar(
        v[label.n] + 1
    )
    return omega_power(e).scale(r)


def reference_terms(beta, label, order, active=ALL_PARAMETERS):
    """Every multi-index on ``active`` of degree <= ``order`` passing the constraint.

    Brute force over all candidates; kept as the oracle for :func:`enumerate_terms`.
    """
    out = []
    for a in multi_indices(active, order):
        s = star(a)
        if constraint_holds([beta[q] + s[q] for q in range(4)], label):
            out.append(a)
    return out


def enumerate_terms(beta, label, order, active=ALL_PARAMETERS):
    """Same set as :func:`reference_terms`, with early pruning.

    Parameters are assigned one at a time; a branch is cut once one of the two
    coordinate pairs fails the constraint and no parameter left to assign can
    touch that pair.
    """
    positions = sorted(set(active))
    m, n, l = label.triple
    pairs = ((0, m), (n, l))
    # touch[k][i]: does any of positions[k:] move a coordinate of pair i
    touch = [[False, False] for _ in range(len(positions) + 1)]
    for k in range(len(positions) - 1, -1, -1):
        alpha = DEFORMATION_INDEX[positions[k]]
        for i, (x, y) in enumerate(pairs):
            touch[k][i] = touch[k + 1][i] or bool(alpha[x] or alpha[y])

    out = []
    a = [0] * NPARAMS
    v = list(beta)

    def visit(k, budget):
        for i, (x, y) in enumerate(pairs):
            if (budget == 0 or not touch[k][i]) and not _pair_ok(v[x], v[y]):
                return
        if k == len(positions) or budget == 0:
            out.append(tuple(a))
            return
        p = positions[k]
        alpha = DEFORMATION_INDEX[p]
        for e in range(budget + 1):
            a[p] = e
            for q in range(4):
                v[q] += e * alpha[q]
            visit(k + 1, budget - e)
            for q in range(4):
                v[q] -= e * alpha[q]
        a[p] = 0

    visit(0, order)
    out.sort(key=_sort_key)
    return out


def period_series(i, j, label, order, active=ALL_PARAMETERS, enumerator=enumerate_terms):
    beta = pair_exponent(i, j)
    terms = {}
    for a in enumerator(beta, label, order, active):
        c = term_coefficient(a, beta, label)
        if c:
            terms[a] = c
    return Series._from_clean(order, terms)


class PeriodMatrix:
    """Symmetric 4x4 matrix of period series (up to one global constant)."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def order(self):
        return self.entries[0][0].order

    def minor(self, i1, i2, j1, j2):
        P = self.entries
        return P[i1][j1] * P[i2][j2] - P[i1][j2] * P[i2][j1]

    def minor3(self, rows, cols):
        P = self.entries
        (r0, r1, r2), (c0, c1, c2) = rows, cols
        return (
            P[r0][c0] * (P[r1][c1] * P[r2][c2] - P[r1][c2] * P[r2][c1])
            - P[r0][c1] * (P[r1][c0] * P[r2][c2] - P[r1][c2] * P[r2][c0])
            + P[r0][c2] * (P[r1][c0] * P[r2][c1] - P[r1][c1] * P[r2][c0])
        )

    def minors3(self):
        """All sixteen 3x3 minors, keyed by (rows, cols)."""
        out = {}
        for rows in itertools.combinations(range(4), 3):
            for cols in itertools.combinations(range(4), 3):
                out[rows, cols] = self.minor3(rows, cols)
        return out

    def constant_terms(self):
        return [[s.constant_term() for s in row] for row in self.entries]


def period_matrix(label, order, active=ALL_PARAMETERS, enumerator=enumerate_terms):
    entries = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i, 4):
            s = period_series(i, j, label, order, active, enumerator)
            entries[i][j] = entries[j][i] = s
    return PeriodMatrix(entries)


@dataclass
class LinePencil:
    """Two linear forms L1, L2 in x0..x3 with series coefficients.

    ``unit`` is the minor c_0202 (in the label's coordinates): the coefficient
    of x_m in L1 is ``-unit`` and that of x_l in L2 is ``+unit`` before
    normalization.
    """

    label: LineLabel
    order: int
    active: frozenset
    L1: tuple
    L2: tuple
    unit: Series
    normalized: bool = False
    minors: dict = field(default_factory=dict, repr=False)

    def forms(self):
        return (self.L1, self.L2)

    def constant_forms(self):
        return tuple(tuple(s.constant_term() for s in L) for L in self.forms())

    def with_order(self, order):
        """The same forms read at another truncation order."""
        return LinePencil(
            self.label,
            order,
            self.active,
            tuple(s.with_order(order) for s in self.L1),
            tuple(s.with_order(order) for s in self.L2),
            self.unit.with_order(order),
            self.normalized,
        )

    def replace(self, L1=None, L2=None):
        return LinePencil(
            self.label,
            self.order,
            self.active,
            tuple(L1 if L1 is not None else self.L1),
            tuple(L2 if L2 is not None else self.L2),
            self.unit,
            self.normalized,
            self.minors,
        )


def line_pencil(label, order, active=ALL_PARAMETERS, normalize=False, matrix=None):
    active = frozenset(active)
    P = matrix if matrix is not None else period_matrix(label, order, active)
    s = label.perm

    def c(i1, i2, j1, j2):
        return P.minor(s[i1], s[i2], s[j1], s[j2])

    minors = {
        "0212": c(0, 2, 1, 2),
        "0202": c(0, 2, 0, 2),
        "0201": c(0, 2, 0, 1),
        "0223": c(0, 2, 2, 3),
        "0203": c(0, 2, 0, 3),
    }
    unit = minors["0202"]
    if not unit.constant_term():
        raise InconsistencyError(f"c_0202 has zero constant term for label {label}")
    zero = Series.zero(order)
    L1 = [zero] * 4
    L2 = [zero] * 4
    L1[s[0]] = minors["0212"]
    L1[s[1]] = -unit
    L1[s[2]] = minors["0201"]
    L2[s[0]] = minors["0223"]
    L2[s[2]] = -minors["0203"]
    L2[s[3]] = unit
    if normalize:
        try:
            inv = unit.inverse_unit()
        except NonUnitError as exc:  # pragma: no cover - guarded above
            raise InconsistencyError(str(exc)) from exc
        L1 = [q * inv for q in L1]
        L2 = [r * inv for r in L2]
    return LinePencil(label, order, active, tuple(L1), tuple(L2), unit, normalize, minors)


@dataclass(frozen=True)
class FermatLine:
    """x0 - z1*x_m = 0, x_n - z2*x_l = 0 with exact coefficient vectors."""

    label: LineLabel
    L1: tuple
    L2: tuple


def fermat_lines():
    out = []
    for k in all_labels():
        m, n, l = k.triple
        L1 = [Eisenstein(0)] * 4
        L2 = [Eisenstein(0)] * 4
        L1[0] = Eisenstein(1)
        L1[m] = -k.zeta1.value
        L2[n] = Eisenstein(1)
        L2[l] = -k.zeta2.value
        out.append(FermatLine(k, tuple(L1), tuple(L2)))
    return out
