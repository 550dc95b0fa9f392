from fractions import Fraction

import pytest
from hypothesis import given

from coxtour.errors import InfeasibleError
from coxtour.hh import format_trace, hh_construct, hh_step, slider_total, solve_gamma_star
from coxtour.roots import RootType, rho_complete
from coxtour.score import mean_score

from conftest import feasible_complete, vec
from worked_example import BLOCKS, HEADERS, X, expected_probabilities

C7 = RootType("C", 7)


def test_gamma_star_worked_example():
    abs_scores = vec(".4", ".5", "2.3", "3.4", "4.1", "4.9")
    assert solve_gamma_star(abs_scores, Fraction(18, 10)) == Fraction(335, 100)


def test_gamma_star_zero_target():
    assert solve_gamma_star(vec(1, 2, "7/2"), 0) == Fraction(7, 2)


def test_gamma_star_negative_side_counts_twice():
    # I = [-1, 0]: from gamma = -1/2 the right part and the part in [gamma, 0] are 1/2 each
    assert solve_gamma_star(vec(0), 1) == Fraction(-1, 2)
    assert slider_total(vec(0), Fraction(-1)) == 2
    # I = [0, 1] has no room left of the origin, so its total never exceeds 1
    assert solve_gamma_star(vec(1), 1) == 0
    with pytest.raises(InfeasibleError):
        solve_gamma_star(vec(1), 2)


def test_first_step_matches_worked_example():
    step = hh_step(C7, vec(*X))
    assert step.case == "1a"
    assert step.solitaire == 0
    assert step.minus == vec(0, 0, 0, 0, ".75", 0)
    assert step.plus == vec(0, 0, 0, ".05", 0, 1)
    assert step.x_prime == vec("-.4", ".5", "2.3", "3.35", "-3.35", "3.9")


def test_second_step_matches_worked_example():
    step = hh_step(RootType("C", 6), vec("-.4", ".5", "2.3", "3.35", "-3.35", "3.9"))
    assert step.complemented
    q_minus = tuple(1 - p for p in step.minus)
    q_plus = tuple(1 - p for p in step.plus)
    assert q_minus == vec(0, 0, ".1", 1, 0)
    assert q_plus == vec(0, 0, 0, 0, 1)


def test_rank_one_base_case():
    assert hh_step(RootType("C", 1), vec("1/2")).solitaire == Fraction(3, 4)
    assert hh_step(RootType("B", 1), vec("1/4")).solitaire == Fraction(3, 4)
    assert hh_step(RootType("D", 1), vec(0)).solitaire is None


def test_worked_example_golden():
    trace = []
    tour = hh_construct(C7, vec(*X), trace)
    assert mean_score(tour) == vec(*X)
    expected = expected_probabilities()
    assert {e.key: p for e, p in tour.probs.items()} == expected
    assert [row.player for row in trace] == [b[0] for b in BLOCKS]
    for row, header in zip(trace, HEADERS):
        assert tuple(v for _, v in reversed(row.remaining)) == vec(*header)


def test_trace_text_layout():
    trace = []
    hh_construct(C7, vec(*X), trace)
    text = format_trace(trace)
    assert "[player 7, x = -5.2, case 1a, gamma* = 3.35]" in text
    assert "q_63^-=0.1" in text
    assert "p_51^-=0.275" in text
    assert "p_1^sol = 0.5" in text


@pytest.mark.parametrize("kind", "BCD")
def test_zero_gives_all_halves(kind):
    tour = hh_construct(RootType(kind, 4), [0] * 4)
    assert set(tour.probs.values()) == {Fraction(1, 2)}


@pytest.mark.parametrize("kind", "BCD")
def test_rho_gives_all_wins(kind):
    t = RootType(kind, 5)
    tour = hh_construct(t, rho_complete(t))
    assert mean_score(tour) == rho_complete(t)
    if kind != "D":
        assert set(tour.probs.values()) == {1}
    else:
        # D_n: player 1 has score 0 and its games are decided by the others
        assert tour.deterministic


def test_infeasible_message_names_partial_sum():
    with pytest.raises(InfeasibleError, match="2 largest"):
        hh_construct(RootType("C", 3), vec(3, "5/2", 0))


def test_wrong_length():
    with pytest.raises(ValueError):
        hh_construct(RootType("C", 3), vec(1, 2))


@given(feasible_complete(max_n=7))
def test_realizes_every_feasible_point(case):
    t, x = case
    tour = hh_construct(t, x)
    assert mean_score(tour) == tuple(x)
    assert all(0 <= p <= 1 for p in tour.probs.values())


@given(feasible_complete(max_n=6))
def test_each_step_keeps_order_and_feasibility(case):
    t, x = case
    trace = []
    hh_construct(t, x, trace)
    for row in trace:
        rest = row.step.x_prime
        assert all(abs(a) <= abs(b) for a, b in zip(rest, rest[1:]))
        if rest:
            from coxtour.score import is_mean_score_complete
            assert is_mean_score_complete(RootType(t.kind, len(rest)), rest)


@pytest.mark.parametrize("kind", "BCD")
def test_vertices_give_deterministic_tournaments(kind):
    from coxtour.birkhoff import all_signed_permutations
    from coxtour.majorize import mat_vec

    for n in range(1, 5):
        t = RootType(kind, n)
        for phi in all_signed_permutations(n):
            x = mat_vec(phi.matrix(), rho_complete(t))
            tour = hh_construct(t, x)
            assert tour.deterministic and mean_score(tour) == x
