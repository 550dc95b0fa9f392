import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coxtour.btfit import bt_fit, bt_forward, bt_jacobian, sigma
from coxtour.errors import BoundaryError, ConvergenceError
from coxtour.roots import RootType, rho_complete

from conftest import root_types


def _logistic(u):
    return 1.0 / (1.0 + math.exp(-u))


def _forward_by_hand(lam, t):
    """Scalar loop over the game rules, independent of the vectorised code."""
    solo = {"B": 1.0, "C": 2.0, "D": 0.0}[t.kind]
    out = []
    for i, li in enumerate(lam):
        x = solo * (_logistic(li) - 0.5)
        for j, lj in enumerate(lam):
            if i != j:
                x += _logistic(li - lj) - 0.5 + _logistic(li + lj) - 0.5
        out.append(x)
    return out


strengths = st.floats(-3, 3, allow_nan=False)


def test_zero_strengths_zero_scores():
    for kind in "BCD":
        assert np.all(bt_forward(np.zeros(4), RootType(kind, 4)) == 0)


def test_c2_fixture():
    t = RootType("C", 2)
    x = bt_forward([1.0, -1.0], t)
    expected = _logistic(2) - 0.5 + _logistic(0) - 0.5 + 2 * (_logistic(1) - 0.5)
    assert x[0] == pytest.approx(expected, abs=1e-15)
    assert x[1] == pytest.approx(-expected, abs=1e-15)


def test_round_trip_fixture():
    t = RootType("C", 2)
    x = bt_forward([1.0, -1.0], t)
    lam = bt_fit(x, t, tol=1e-9)
    assert np.max(np.abs(bt_forward(lam, t) - x)) <= 1e-9


def test_fit_zero():
    assert np.all(bt_fit(["0", "0", "0"], RootType("B", 3)) == 0)


def test_boundary_rejected():
    for kind in "BCD":
        t = RootType(kind, 3)
        with pytest.raises(BoundaryError):
            bt_fit(rho_complete(t), t)


def test_d1_only_zero():
    t = RootType("D", 1)
    assert bt_fit(["0"], t).tolist() == [0.0]
    with pytest.raises(BoundaryError):
        bt_fit(["1/10"], t)


def test_iteration_cap_reports_residual():
    t = RootType("C", 3)
    x = bt_forward([2.5, -1.0, 0.5], t)
    with pytest.raises(ConvergenceError) as info:
        bt_fit(x, t, tol=1e-14, max_iter=1)
    assert info.value.residual > 0


def test_sigma_is_stable():
    vals = sigma(np.array([-800.0, 0.0, 800.0]))
    assert vals.tolist() == [0.0, 0.5, 1.0]


@given(root_types(max_n=6), st.data())
def test_forward_matches_scalar_evaluation(t, data):
    lam = data.draw(st.lists(strengths, min_size=t.n, max_size=t.n))
    assert np.allclose(bt_forward(lam, t), _forward_by_hand(lam, t), atol=1e-12)


@given(root_types(max_n=6), st.data())
def test_forward_is_odd(t, data):
    lam = np.array(data.draw(st.lists(strengths, min_size=t.n, max_size=t.n)))
    assert np.allclose(bt_forward(-lam, t), -bt_forward(lam, t), atol=1e-14)


@given(root_types(max_n=6), st.data())
def test_jacobian_structure(t, data):
    lam = data.draw(st.lists(strengths, min_size=t.n, max_size=t.n))
    jac = bt_jacobian(lam, t)
    assert np.allclose(jac, jac.T)
    if t.n > 1 or t.kind != "D":
        assert np.all(np.diag(jac) > 0)
        off = np.abs(jac).sum(axis=1) - np.abs(np.diag(jac))
        assert np.all(np.diag(jac) >= off - 1e-15)


@given(root_types(max_n=6), st.data())
def test_monotone_in_own_strength(t, data):
    lam = np.array(data.draw(st.lists(strengths, min_size=t.n, max_size=t.n)))
    i = data.draw(st.integers(0, t.n - 1))
    bump = lam.copy()
    bump[i] += 0.25
    if t.kind == "D" and t.n == 1:
        return
    assert bt_forward(bump, t)[i] > bt_forward(lam, t)[i]


def test_near_boundary_behaviour_is_reported(capsys):
    """Interior points close to rho: fits are reported, not required to converge."""
    from fractions import Fraction

    rows = []
    for kind in "BCD":
        t = RootType(kind, 3)
        rho = rho_complete(t)
        for k in range(1, 7):
            eps = Fraction(1, 10**k)
            x = [(1 - eps) * r for r in rho]
            try:
                lam = bt_fit(x, t, tol=1e-9)
                res = float(np.max(np.abs(bt_forward(lam, t) - np.array([float(v) for v in x]))))
                rows.append((kind, k, "ok", res, float(np.max(np.abs(lam)))))
            except ConvergenceError as exc:
                rows.append((kind, k, "no convergence", exc.residual, math.nan))
    with capsys.disabled():
        print("\nBradley-Terry fits at (1 - 10^-k) rho, n = 3:")
        for kind, k, status, res, size in rows:
            print(f"  {kind}3 k={k}: {status}, residual {res:.2e}, max|lam| {size:.2f}")
    assert all(math.isfinite(r[3]) for r in rows)
