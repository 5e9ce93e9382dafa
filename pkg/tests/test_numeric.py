import numpy as np
import pytest

from fermat27.formula import all_labels, fermat_lines, line_pencil
from fermat27.numeric import (
    DegeneratePencilError,
    NumericLine,
    cubic_value,
    evaluate_pencil,
    line_points,
    scaling_check,
    surface_residual,
)
from fermat27.ring import embed_complex
from fermat27.series import Series
from fermat27.verify import check_fermat_limit, solve_line, substitute_cubic


def test_zero_assignment_is_fermat_pencil():
    report = check_fermat_limit()
    closed = fermat_lines()
    for k, f, e in zip(all_labels(), closed, report.entries):
        nl = evaluate_pencil(line_pencil(k, 2), {})
        s1, s2 = e["scalars"]
        want1 = np.array([embed_complex(s1 * c) for c in f.L1])
        want2 = np.array([embed_complex(s2 * c) for c in f.L2])
        assert np.allclose(nl.L1, want1, atol=1e-15)
        assert np.allclose(nl.L2, want2, atol=1e-15)


def test_smoke_evaluation():
    nl = evaluate_pencil(line_pencil(all_labels()[0], 4, frozenset([5])), {5: 0.01})
    assert np.all(np.isfinite(nl.L1)) and np.all(np.isfinite(nl.L2))


def test_conjugate_labels_give_conjugate_lines():
    S = frozenset([5, 12])
    point = {5: 0.01, 12: -0.02}
    for k in all_labels()[::2]:
        a = evaluate_pencil(line_pencil(k, 3, S), point)
        b = evaluate_pencil(line_pencil(k.conjugate(), 3, S), point)
        assert np.allclose(a.L1, b.L1.conj(), atol=1e-14)
        assert np.allclose(a.L2, b.L2.conj(), atol=1e-14)


def test_fermat_residual():
    for k in all_labels():
        nl = evaluate_pencil(line_pencil(k, 0), {})
        assert surface_residual(nl) <= 1e-14


def test_random_line_residual():
    rng = np.random.default_rng(4)
    M = rng.normal(size=(2, 4)) + 1j * rng.normal(size=(2, 4))
    nl = NumericLine(M[0], M[1], {}, 0)
    assert surface_residual(nl) > 1e-3


def test_degenerate_pencil():
    k = all_labels()[0]
    p = line_pencil(k, 1)
    with pytest.raises(DegeneratePencilError):
        evaluate_pencil(p.replace(L2=p.L1), {})
    zero = (Series.zero(1),) * 4
    with pytest.raises(DegeneratePencilError):
        evaluate_pencil(p.replace(L1=zero), {})


def test_points_lie_on_line():
    k = all_labels()[15]
    nl = evaluate_pencil(line_pencil(k, 2, frozenset([3])), {3: 0.01})
    for x in line_points(nl, 10):
        assert abs(np.linalg.norm(x) - 1) < 1e-14
        assert abs(nl.L1 @ x) < 1e-14 and abs(nl.L2 @ x) < 1e-14
    with pytest.raises(ValueError):
        line_points(nl, 2)


@pytest.mark.parametrize("N", [0, 2, 4])
def test_scaling_examples(N):
    r = scaling_check(all_labels()[0], 10, 0.02, N)
    assert r.passed
    assert 0.5 * 2.0 ** -(N + 1) <= r.ratio <= 2 * 2.0 ** -(N + 1)


def test_scaling_six():
    r = scaling_check(all_labels()[0], 5, 0.02, 6)
    assert r.passed


def test_residual_improves_with_order():
    k = all_labels()[9]
    res = [surface_residual(evaluate_pencil(line_pencil(k, N, frozenset([7])), {7: 0.02})) for N in (0, 2, 4, 6)]
    for a, b in zip(res, res[1:]):
        assert b <= a + 1e-15


@pytest.mark.parametrize("k", all_labels()[::6], ids=str)
def test_exact_and_numeric_residual_agree(k):
    N, extra = 2, 6
    S = frozenset([5, 14])
    point = {5: 0.01, 14: -0.008j}
    pencil = line_pencil(k, N, S)
    nl = evaluate_pencil(pencil, point)
    # the order-N pencil, expanded to order N + extra, is the numeric line up to O(t^(N+extra+1))
    cubic = substitute_cubic(solve_line(pencil.with_order(N + extra)), N + extra, S)
    n = k.n
    exact_side, numeric_side = [], []
    for x in line_points(nl, 8):
        exact_side.append(abs(cubic.evaluate(point, x[0], x[n])))
        numeric_side.append(abs(cubic_value(x, point)))
    assert abs(max(exact_side) - max(numeric_side)) < 1e-10
    assert max(numeric_side) == pytest.approx(surface_residual(nl), abs=1e-18)


def test_scaling_every_label_and_parameter():
    failures = []
    for k in all_labels():
        for p in range(20):
            for N in (0, 2, 4):
                r = scaling_check(k, p, 0.02, N)
                if not r.passed:
                    failures.append((k.index, p, N, r.ratio))
    assert not failures


def test_scaling_rejects_large_t0():
    with pytest.raises(ValueError):
        scaling_check(all_labels()[0], 10, 0.2, 2)
