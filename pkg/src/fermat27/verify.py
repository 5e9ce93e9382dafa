"""Exact checks that the computed pencils really are lines on the deformed cubic.

A line {L1 = L2 = 0} lies on {F_t = 0} iff F_t vanishes after eliminating two
of the coordinates with L1, L2.  With the label's coordinates (0, m, n, l) we
solve for x_m and x_l in terms of x0 and x_n, substitute into

    F_t = x0**3 + x1**3 + x2**3 + x3**3 - sum_alpha t_alpha * x**alpha

and collect the four coefficients of the resulting binary cubic in (x0, x_n).
All of them must be the zero series.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import (
    ALL_PARAMETERS,
    LinePencil,
    all_labels,
    fermat_lines,
    line_pencil,
    period_matrix,
)
from .series import DEFORMATION_INDEX, NonUnitError, Series, monomial_str

__all__ = [
    "SolvedLine",
    "RestrictedCubic",
    "SurfaceReport",
    "RankReport",
    "FermatReport",
    "solve_line",
    "substitute_cubic",
    "check_pencil_on_surface",
    "check_on_surface",
    "check_rank_two",
    "check_fermat_limit",
    "CUBIC_MONOMIALS",
]

CUBIC_MONOMIALS = ("x0^3", "x0^2*xn", "x0*xn^2", "xn^3")


@dataclass
class SolvedLine:
    """x_m = s10*x0 + s12*x_n and x_l = s30*x0 + s32*x_n."""

    perm: tuple
    s10: Series
    s12: Series
    s30: Series
    s32: Series

    @property
    def order(self):
        return self.s10.order

    def linear_forms(self):
        """Each x_q as a pair (coefficient of x0, coefficient of x_n)."""
        N = self.order
        one, zero = Series.one(N), Series.zero(N)
        _, m, n, l = self.perm
        forms = [None] * 4
        forms[0] = (one, zero)
        forms[n] = (zero, one)
        forms[m] = (self.s10, self.s12)
        forms[l] = (self.s30, self.s32)
        return forms


@dataclass
class RestrictedCubic:
    coefficients: tuple  # of x0^3, x0^2*x_n, x0*x_n^2, x_n^3

    def is_zero(self):
        return all(c.is_zero() for c in self.coefficients)

    def nonzero_terms(self):
        out = []
        for name, s in zip(CUBIC_MONOMIALS, self.coefficients):
            for a, c in s.sorted_terms():
                out.append({"monomial": name, "exponents": list(a), "term": monomial_str(a) or "1", "coefficient": str(c)})
        return out

    def evaluate(self, assignment, x0, xn):
        vals = [s.evaluate(assignment) for s in self.coefficients]
        return vals[0] * x0**3 + vals[1] * x0**2 * xn + vals[2] * x0 * xn**2 + vals[3] * xn**3


def solve_line(pencil):
    """Eliminate x_m and x_l from the pencil.

    The 2x2 system in (x_m, x_l) is inverted through its determinant, which
    must be a unit; for a freshly computed pencil it is diagonal and only
    c_0202 gets inverted.
    """
    _, m, n, l = pencil.label.perm
    L1, L2 = pencil.L1, pencil.L2
    q0, qm, qn, ql = L1[0], L1[m], L1[n], L1[l]
    r0, rm, rn, rl = L2[0], L2[m], L2[n], L2[l]
    if ql.is_zero() and rm.is_zero():
        inv_m = qm.inverse_unit()
        inv_l = -inv_m if rl == -qm else rl.inverse_unit()
        return SolvedLine(
            pencil.label.perm,
            -(q0 * inv_m),
            -(qn * inv_m),
            -(r0 * inv_l),
            -(rn * inv_l),
        )
    det_inv = (qm * rl - ql * rm).inverse_unit()
    # x_m = (-rl*(q0 x0 + qn xn) + ql*(r0 x0 + rn xn)) / det
    # x_l = (-qm*(r0 x0 + rn xn) + rm*(q0 x0 + qn xn)) / det
    return SolvedLine(
        pencil.label.perm,
        (ql * r0 - rl * q0) * det_inv,
        (ql * rn - rl * qn) * det_inv,
        (rm * q0 - qm * r0) * det_inv,
        (rm * qn - qm * rn) * det_inv,
    )


def _bin_mul(f, g, N):
    out = [Series.zero(N) for _ in range(len(f) + len(g) - 1)]
    for i, x in enumerate(f):
        if x.is_zero():
            continue
        for j, y in enumerate(g):
            if y.is_zero():
                continue
            out[i + j] = out[i + j] + x * y
    return out


def substitute_cubic(sl, order=None, active=ALL_PARAMETERS):
    N = sl.order if order is None else order
    forms = [tuple(s.with_order(N) for s in f) for f in sl.linear_forms()]
    one = Series.one(N)
    powers = []
    for f in forms:
        p = [[one], list(f)]
        p.append(_bin_mul(p[1], p[1], N))
        p.append(_bin_mul(p[2], p[1], N))
        powers.append(p)

    total = [Series.zero(N) for _ in range(4)]
    for q in range(4):
        for k, s in enumerate(powers[q][3]):
            total[k] = total[k] + s
    for p in sorted(active):
        if N < 1:
            break
        alpha = DEFORMATION_INDEX[p]
        mono = [one]
        for q in range(4):
            if alpha[q]:
                mono = _bin_mul(mono, powers[q][alpha[q]], N)
        for k, s in enumerate(mono):
            total[k] = total[k] - s.times_variable(p)
    return RestrictedCubic(tuple(total))


@dataclass
class SurfaceReport:
    label: object
    order: int
    active: tuple
    passed: bool
    offending: list = field(default_factory=list)
    error: str = ""

    def to_json(self):
        return {
            "check": "on_surface",
            "passed": self.passed,
            "offending": self.offending,
            "error": self.error,
        }


def check_pencil_on_surface(pencil, active=None):
    active = pencil.active if active is None else active
    report = SurfaceReport(pencil.label, pencil.order, tuple(sorted(active)), False)
    try:
        sl = solve_line(pencil)
    except NonUnitError as exc:
        report.error = f"pencil cannot be solved for x_m, x_l: {exc}"
        return report
    cubic = substitute_cubic(sl, pencil.order, active)
    report.offending = cubic.nonzero_terms()
    report.passed = not report.offending
    return report


def check_on_surface(label, order, active=ALL_PARAMETERS, pencil=None):
    if pencil is None:
        pencil = line_pencil(label, order, active)
    return check_pencil_on_surface(pencil, active)


@dataclass
class RankReport:
    label: object
    order: int
    passed: bool
    nonzero_minors: list = field(default_factory=list)

    def to_json(self):
        return {"check": "rank_two", "passed": self.passed, "nonzero_minors": self.nonzero_minors}


def check_rank_two(label, order, active=ALL_PARAMETERS, matrix=None):
    P = matrix if matrix is not None else period_matrix(label, order, active)
    bad = []
    for (rows, cols), s in P.minors3().items():
        if not s.is_zero():
            a, c = s.sorted_terms()[0]
            bad.append(
                {
                    "rows": list(rows),
                    "cols": list(cols),
                    "terms": len(s),
                    "lowest_term": monomial_str(a) or "1",
                    "coefficient": str(c),
                }
            )
    return RankReport(label, P.order, not bad, bad)


def _proportionality(u, f):
    """The scalar s with u = s*f, or None."""
    k = next(i for i, x in enumerate(f) if x)
    s = u[k] / f[k]
    if not s or any(u[i] != s * f[i] for i in range(4)):
        return None
    return s


@dataclass
class FermatReport:
    passed: bool
    entries: list

    def to_json(self):
        entries = [{k: v for k, v in e.items() if k != "scalars"} for e in self.entries]
        return {"check": "fermat_limit", "passed": self.passed, "entries": entries}


def check_fermat_limit(labels=None):
    """Compare the t = 0 pencils with the closed-form Fermat lines."""
    closed = {f.label: f for f in fermat_lines()}
    labels = all_labels() if labels is None else labels
    entries = []
    for k in labels:
        pencil = line_pencil(k, 0, frozenset())
        U1, U2 = pencil.constant_forms()
        f = closed[k]
        s1 = _proportionality(U1, f.L1)
        s2 = _proportionality(U2, f.L2)
        entries.append(
            {
                "label": k.index,
                "passed": s1 is not None and s2 is not None,
                "L1_scalar": str(s1) if s1 is not None else None,
                "L2_scalar": str(s2) if s2 is not None else None,
                "scalars": (s1, s2),
            }
        )
    return FermatReport(all(e["passed"] for e in entries), entries)

