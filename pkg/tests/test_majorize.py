from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxtour.errors import InfeasibleError
from coxtour.majorize import (
    dominating_vector,
    first_violation,
    is_doubly_stochastic,
    majorizes,
    mat_vec,
    phi_ell_feasible,
    strict_weak_submajorizes,
    t_transform_chain,
    transfer_factors,
    transfer_matrix,
    weak_submajorizes,
)
from coxtour.roots import RootType, rho_complete

from conftest import rationals, root_types, vec

WORKED_ABS = vec(".4", ".5", "2.3", "3.4", "4.1", "4.9", "5.2")


def test_weak_submajorization_examples():
    assert weak_submajorizes(vec(0, 0, 0), vec(1, 2, 3))
    assert weak_submajorizes(WORKED_ABS, vec(*range(1, 8)))
    assert not weak_submajorizes(vec(3, 3), vec(1, 2))


def test_strict_examples():
    assert strict_weak_submajorizes(vec(0, 0), vec(1, 2))
    assert not strict_weak_submajorizes(vec(1, 2), vec(1, 2))
    assert strict_weak_submajorizes(vec("1/2", "1/2", "1/2"), vec(1, 2, 3))


def test_length_mismatch():
    with pytest.raises(ValueError):
        weak_submajorizes(vec(1), vec(1, 2))


def test_first_violation_reports_k():
    assert first_violation(vec(3, 0), vec(1, 2)) == (1, 3, 2)


def test_phi_ell_examples():
    c2 = RootType("C", 2)
    assert phi_ell_feasible(rho_complete(c2), c2)
    assert phi_ell_feasible(vec(0, 0), c2)
    assert not phi_ell_feasible(vec(0, "5/2"), c2)


def _check_dominating(x_abs, y):
    u = dominating_vector(x_abs, y)
    assert all(a <= b for a, b in zip(x_abs, u))
    assert majorizes(y, u)
    return u


def test_dominating_vector_examples():
    assert dominating_vector(vec(1, 2), vec(1, 2)) == vec(1, 2)
    assert _check_dominating(vec(0, 0), vec(1, 2)) == vec("3/2", "3/2")
    _check_dominating(vec(1, 0), vec(1, 2))
    with pytest.raises(InfeasibleError):
        dominating_vector(vec(3, 3), vec(1, 2))


def test_transfer_matrix_examples():
    y = vec(1, 2)
    assert transfer_matrix(y, y).entries == ((1, 0), (0, 1))
    assert transfer_matrix(vec(0, 0), y).entries == ((0, 0), (0, 0))
    s = transfer_matrix(vec("3/2", "3/2"), y)
    half = Fraction(1, 2)
    assert s.entries == ((half, half), (half, half))
    assert s.apply(y) == vec("3/2", "3/2")


@given(root_types(max_n=8), st.data())
def test_threshold_form_matches_partial_sums(t, data):
    x = data.draw(st.lists(rationals, min_size=t.n, max_size=t.n))
    assert weak_submajorizes([abs(v) for v in x], rho_complete(t)) == phi_ell_feasible(x, t)


@st.composite
def submajorized_pairs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    y = sorted(
        (Fraction(draw(st.integers(0, 30)), draw(st.sampled_from([1, 2, 3, 4]))) for _ in range(n)),
        reverse=True,
    )
    # shrink a random doubly stochastic image of y: a T-transform then a scale
    x = list(y)
    if n > 1:
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        lam = Fraction(draw(st.integers(0, 4)), 4)
        x[i], x[j] = lam * y[i] + (1 - lam) * y[j], (1 - lam) * y[i] + lam * y[j]
    x = [v * Fraction(draw(st.integers(0, 6)), 6) for v in x]
    order = draw(st.permutations(range(n)))
    return [x[k] for k in order], list(y)


@given(submajorized_pairs())
def test_transfer_matrix_is_exact_and_substochastic(pair):
    x_abs, y = pair
    assert weak_submajorizes(x_abs, y)
    s = transfer_matrix(x_abs, y)
    assert s.apply(y) == tuple(x_abs)
    assert s.is_doubly_substochastic()


@given(submajorized_pairs())
def test_t_transform_count(pair):
    x_abs, y = pair
    u = dominating_vector(x_abs, y)
    d, steps = t_transform_chain(u, y)
    assert steps <= len(y) - 1
    assert is_doubly_stochastic(d)
    assert mat_vec(d, y) == tuple(u)


@given(submajorized_pairs())
def test_factor_rows_are_proportional(pair):
    x_abs, y = pair
    s, d, u = transfer_factors(x_abs, y)
    for i in range(len(y)):
        if u[i]:
            assert all(a == x_abs[i] / u[i] * b for a, b in zip(s[i], d[i]))
