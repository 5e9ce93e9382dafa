"""Floating-point evaluation of the pencils and residuals of F_t on the lines."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .formula import line_pencil
from .series import DEFORMATION_INDEX

__all__ = [
    "DegeneratePencilError",
    "NumericLine",
    "evaluate_pencil",
    "cubic_value",
    "line_points",
    "surface_residual",
    "ScalingReport",
    "scaling_check",
    "scaling_check_assignment",
    "RESIDUAL_FLOOR",
]

RESIDUAL_FLOOR = 1e-13
_INDEPENDENCE_TOL = 1e-8
_EXPONENTS = np.array(DEFORMATION_INDEX)


class DegeneratePencilError(ValueError):
    """The two linear forms are (numerically) dependent."""


@dataclass
class NumericLine:
    L1: np.ndarray
    L2: np.ndarray
    assignment: dict
    order: int

    def matrix(self):
        return np.vstack([self.L1, self.L2])


def _independence(M):
    rows = M / np.linalg.norm(M, axis=1, keepdims=True)
    best, pivots = 0.0, None
    for i in range(4):
        for j in range(i + 1, 4):
            d = abs(rows[0, i] * rows[1, j] - rows[0, j] * rows[1, i])
            if d > best:
                best, pivots = d, (i, j)
    return best, pivots


def evaluate_pencil(pencil, assignment):
    assignment = {int(p): complex(v) for p, v in assignment.items()}
    L1 = np.array([s.evaluate(assignment) for s in pencil.L1], dtype=complex)
    L2 = np.array([s.evaluate(assignment) for s in pencil.L2], dtype=complex)
    nl = NumericLine(L1, L2, assignment, pencil.order)
    M = nl.matrix()
    if not np.all(np.linalg.norm(M, axis=1) > 0):
        raise DegeneratePencilError("a linear form evaluated to zero")
    if _independence(M)[0] <= _INDEPENDENCE_TOL:
        raise DegeneratePencilError("linear forms are dependent at this point")
    return nl


def cubic_value(x, assignment):
    """F_t(x) = sum x_q**3 - sum_alpha t_alpha x**alpha."""
    x = np.asarray(x, dtype=complex)
    value = np.sum(x**3)
    for p, t in assignment.items():
        if t:
            value -= t * np.prod(x ** _EXPONENTS[p])
    return value


def _kernel_basis(M):
    _, (i, j) = _independence(M)
    free = [q for q in range(4) if q not in (i, j)]
    A = M[:, [i, j]]
    basis = []
    for f in free:
        v = np.zeros(4, dtype=complex)
        v[f] = 1.0
        v[[i, j]] = np.linalg.solve(A, -M[:, f])
        basis.append(v)
    return basis


def line_points(nl, samples=8, seed=0):
    """Unit-norm points on the line: the charts 0, 1, infinity, then seeded random ones."""
    if samples < 3:
        raise ValueError("need at least three sample points")
    K1, K2 = _kernel_basis(nl.matrix())
    rng = np.random.default_rng(seed)
    params = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    while len(params) < samples:
        z = rng.normal(size=2) + 1j * rng.normal(size=2)
        params.append((z[0], z[1]))
    out = []
    for s, r in params:
        x = s * K1 + r * K2
        out.append(x / np.linalg.norm(x))
    return out


def surface_residual(nl, assignment=None, samples=8, seed=0):
    """max |F_t| over unit-norm sample points of the line."""
    assignment = nl.assignment if assignment is None else assignment
    return max(abs(cubic_value(x, assignment)) for x in line_points(nl, samples, seed))


@dataclass
class ScalingReport:
    order: int
    t0: float
    residual: float
    residual_half: float
    expected: float
    passed: bool

    @property
    def ratio(self):
        if self.residual == 0:
            return float("nan")
        return self.residual_half / self.residual

    def to_json(self):
        return {
            "order": self.order,
            "t0": self.t0,
            "residual": self.residual,
            "residual_half": self.residual_half,
            "ratio": self.ratio,
            "expected_ratio": self.expected,
            "passed": self.passed,
        }


def scaling_check_assignment(pencil, assignment, samples=8, seed=0):
    """Residual at ``assignment`` and at half of it; the ratio should be 2**-(N+1)."""
    N = pencil.order
    r1 = surface_residual(evaluate_pencil(pencil, assignment), samples=samples, seed=seed)
    half = {p: v / 2 for p, v in assignment.items()}
    r2 = surface_residual(evaluate_pencil(pencil, half), samples=samples, seed=seed)
    expected = 2.0 ** -(N + 1)
    if r1 < RESIDUAL_FLOOR and r2 < RESIDUAL_FLOOR:
        passed = True
    else:
        passed = r1 > 0 and 0.5 * expected <= r2 / r1 <= 2 * expected
    t0 = max((abs(v) for v in assignment.values()), default=0.0)
    return ScalingReport(N, t0, r1, r2, expected, bool(passed))


def scaling_check(label, parameter, t0, order, samples=8, seed=0):
    if abs(t0) > 0.05:
        raise ValueError("scaling check expects |t0| <= 0.05")
    pencil = line_pencil(label, order, frozenset([parameter]))
    return scaling_check_assignment(pencil, {parameter: t0}, samples, seed)
