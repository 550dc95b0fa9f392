from fractions import Fraction
from itertools import chain, combinations

import pytest
from hypothesis import given, strategies as st

from coxtour.errors import ComplexityError, UnsupportedTypeError
from coxtour.oracle import lp_member
from coxtour.roots import AdmissibleSubset, RootType, rho_complete
from coxtour.score import (
    Tournament,
    h_signed,
    h_value,
    is_mean_score,
    is_mean_score_complete,
    is_translated_lattice_point,
    mean_score,
    rho_graph,
    uniform_tournament,
    violated_subset,
)
from coxtour.sgraph import SignedGraph, complete_graph

from conftest import digon, feasible_complete, rationals, root_types, single_loop, vec

WORKED_X = vec("-.4", ".5", "2.3", "3.4", "-4.1", "4.9", "-5.2")


def test_uniform_tournament_scores_zero():
    for kind in "BCD":
        g = complete_graph(RootType(kind, 4))
        assert mean_score(uniform_tournament(g)) == (0,) * 4


def test_all_win_c2():
    g = complete_graph(RootType("C", 2))
    t = Tournament(g, {"neg:2-1": 1, "pos:2-1": 1, "loop:1": 1, "loop:2": 1})
    assert mean_score(t) == vec(1, 2)
    assert t.deterministic


def test_tournament_validation():
    g = complete_graph(RootType("C", 2))
    with pytest.raises(ValueError):
        Tournament(g, {"neg:2-1": 1})
    with pytest.raises(ValueError):
        Tournament(g, {"neg:2-1": 2, "pos:2-1": 1, "loop:1": 1, "loop:2": 1})
    with pytest.raises(TypeError):
        Tournament(g, {"neg:2-1": 0.5, "pos:2-1": 1, "loop:1": 1, "loop:2": 1})


def test_beats_is_orientation_aware():
    g = SignedGraph(RootType("D", 2), neg_edges=[(2, 1)])
    t = Tournament(g, {"neg:2-1": "3/4"})
    assert t.beats(2, 1) == Fraction(3, 4)
    assert t.beats(1, 2) == Fraction(1, 4)


def test_tournament_json_round_trip():
    g = complete_graph(RootType("B", 2))
    t = Tournament(g, {"neg:2-1": "1/3", "pos:2-1": "0", "half:1": "1/2", "half:2": "1"})
    doc = t.to_json()
    again = Tournament.from_json(doc)
    assert again == t
    assert doc["mean_score"] == [str(v) for v in mean_score(t)]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_h_on_complete_c(n):
    g = complete_graph(RootType("C", n))
    for k in range(n + 1):
        s = set(range(1, k + 1))
        assert h_value(g, s) == sum(range(n - k + 1, n + 1))


def test_h_examples():
    assert h_value(complete_graph(RootType("D", 3)), set()) == 0
    assert h_value(digon(), {1}) == 1
    with pytest.raises(UnsupportedTypeError):
        h_value(SignedGraph(RootType("A", 2), neg_edges=[(2, 1)]), {1})


def test_h_signed_matches_edge_count_on_all_plus_subsets():
    g = SignedGraph(RootType("B", 3), neg_edges=[(2, 1)], pos_edges=[(3, 2)], half_edges=[1, 3])
    for k in range(4):
        for s in combinations(range(1, 4), k):
            assert h_signed(g, AdmissibleSubset(frozenset(s), frozenset())) == h_value(g, s)


def test_membership_examples():
    c2 = complete_graph(RootType("C", 2))
    assert is_mean_score(c2, vec(0, 0))
    assert is_mean_score(c2, vec(1, 2))
    assert not is_mean_score(c2, vec(0, "5/2"))
    bad = violated_subset(c2, vec(0, "5/2"))
    assert bad.plus == {2} and not bad.minus


def test_complete_membership_examples():
    assert is_mean_score_complete(RootType("C", 7), WORKED_X)
    assert is_mean_score_complete(RootType("D", 1), vec(0))
    assert not is_mean_score_complete(RootType("D", 1), vec("1/2"))
    assert is_mean_score_complete(RootType("B", 1), vec("-1/2"))


def test_translated_lattice_examples():
    assert rho_graph(digon()) == vec(0, 1)
    assert is_translated_lattice_point(digon(), (1, 1))
    assert is_translated_lattice_point(single_loop(), (1,))
    assert not is_translated_lattice_point(digon(), (3, 0))


def test_unsigned_subsets_are_not_enough_without_sign_symmetry():
    # one competitive game: 2 beats 1 for sure
    g = SignedGraph(RootType("D", 2), neg_edges=[(2, 1)])
    x = mean_score(Tournament(g, {"neg:2-1": 1}))
    assert x == vec("-1/2", "1/2")
    # the bound on the unsigned pair {1, 2} is 0, which |x_1| + |x_2| = 1 breaks
    assert h_value(g, {1, 2}) == 0
    assert is_mean_score(g, x)
    assert lp_member(g, x)
    # the signed subset {+2, -1} carries the bound that actually matters
    assert h_signed(g, AdmissibleSubset(frozenset({2}), frozenset({1}))) == 1


def test_size_caps():
    with pytest.raises(ComplexityError):
        is_mean_score(complete_graph(RootType("D", 21)), [0] * 21)
    path = SignedGraph(RootType("D", 13), neg_edges=[(i + 1, i) for i in range(1, 13)])
    with pytest.raises(ComplexityError):
        is_mean_score(path, [0] * 13)


def _tournaments(g, data):
    return Tournament(g, {e: data.draw(st.fractions(0, 1, max_denominator=8)) for e in g.edges})


@given(root_types(max_n=4), st.data())
def test_complement_negates_scores(t, data):
    tour = _tournaments(complete_graph(t), data)
    assert mean_score(tour.complement()) == tuple(-v for v in mean_score(tour))


@given(root_types(max_n=5), st.data())
def test_deterministic_scores_are_members(t, data):
    g = complete_graph(t)
    tour = Tournament(g, {e: data.draw(st.sampled_from([0, 1])) for e in g.edges})
    assert is_mean_score(g, mean_score(tour))
    assert is_mean_score_complete(t, mean_score(tour))


@given(root_types(max_n=5), st.data())
def test_any_tournament_score_is_member(t, data):
    g = complete_graph(t)
    assert is_mean_score(g, mean_score(_tournaments(g, data)))


@given(root_types(max_n=5), st.data())
def test_complete_test_matches_subset_test(t, data):
    x = data.draw(st.lists(rationals, min_size=t.n, max_size=t.n))
    g = complete_graph(t)
    assert is_mean_score_complete(t, x) == is_mean_score(g, x)


@given(feasible_complete(max_n=5))
def test_generated_points_are_feasible(case):
    t, x = case
    assert is_mean_score_complete(t, x)
    assert is_mean_score(complete_graph(t), x)


def test_rho_is_on_the_boundary():
    for kind in "BCD":
        t = RootType(kind, 4)
        rho = rho_complete(t)
        assert is_mean_score_complete(t, rho)
        bumped = rho[:-1] + (rho[-1] + Fraction(1, 100),)
        assert not is_mean_score_complete(t, bumped)
