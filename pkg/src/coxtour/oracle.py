"""Brute-force ground truth for small instances.

Nothing here uses the inequality description of the zonotope: membership is
decided by linear programming over the probability cube, and deterministic
score sequences are listed by enumerating all 0/1 tournaments.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .errors import ComplexityError
from .rational import to_vector
from .roots import RootType
from .score import rho_graph
from .sgraph import SignedGraph, incidence_matrix
from .simplex import find_feasible


@dataclass(frozen=True)
class OracleBudget:
    max_edges: int = 20
    max_n: int = 6

    def check(self, g: SignedGraph) -> None:
        if len(g.edges) > self.max_edges or g.n > self.max_n:
            raise ComplexityError(
                f"oracle budget is n <= {self.max_n}, |E| <= {self.max_edges}; "
                f"got n = {g.n}, |E| = {len(g.edges)}"
            )


DEFAULT_BUDGET = OracleBudget()


def enumerate_deterministic_targets(g: SignedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> set:
    """Translated scores ``I(G) p`` for every ``p`` in ``{0,1}^|E|``, as integer tuples."""
    budget.check(g)
    m = len(g.edges)
    if m == 0:
        return {(0,) * g.n}
    inc = np.array(incidence_matrix(g), dtype=np.int64)
    out = set()
    for bits in _bit_chunks(m):
        scores = np.unique(bits @ inc.T, axis=0)
        out.update(tuple(int(v) for v in row) for row in scores)
    return out


def _bit_chunks(m: int, chunk_bits: int = 16):
    """All rows of ``{0,1}^m`` in blocks of at most ``2**chunk_bits``."""
    low = min(m, chunk_bits)
    base = ((np.arange(2**low)[:, None] >> np.arange(low)) & 1).astype(np.int64)
    for high in range(2 ** (m - low)):
        tail = ((high >> np.arange(m - low)) & 1).astype(np.int64)
        yield np.hstack([base, np.broadcast_to(tail, (len(base), m - low))])


def enumerate_deterministic_scores(g: SignedGraph, budget: OracleBudget = DEFAULT_BUDGET) -> set:
    """Mean score sequences of all 0/1 tournaments on ``g``."""
    rho = rho_graph(g)
    return {
        tuple(Fraction(a) - r for a, r in zip(t, rho))
        for t in enumerate_deterministic_targets(g, budget)
    }


@lru_cache(maxsize=256)
def _lp_data(g: SignedGraph):
    inc = tuple(tuple(row) for row in incidence_matrix(g))
    return inc, rho_graph(g), (1,) * len(g.edges)


def lp_member(g: SignedGraph, x: Sequence, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Is there ``p`` in ``[0,1]^|E|`` with ``sum_e (p_e - 1/2) root(e) = x``?"""
    budget.check(g)
    x = to_vector(x)
    if len(x) != g.n:
        raise ValueError(f"expected {g.n} scores, got {len(x)}")
    if not g.edges:
        return all(v == 0 for v in x)
    inc, rho, upper = _lp_data(g)
    target = [a + r for a, r in zip(x, rho)]
    return find_feasible(inc, target, upper, solution=False)


def lp_witness(g: SignedGraph, x: Sequence, budget: OracleBudget = DEFAULT_BUDGET):
    """A probability vector (canonical edge order) realizing ``x``, or ``None``."""
    budget.check(g)
    x = to_vector(x)
    if len(x) != g.n:
        raise ValueError(f"expected {g.n} scores, got {len(x)}")
    target = [a + r for a, r in zip(x, rho_graph(g))]
    if not g.edges:
        return [] if all(v == 0 for v in x) else None
    return find_feasible(incidence_matrix(g), target, [1] * len(g.edges))


def hull_member(points: Sequence[Sequence], x: Sequence) -> bool:
    """Is ``x`` a convex combination of ``points``?"""
    points = [to_vector(p) for p in points]
    x = to_vector(x)
    if not points:
        return False
    n = len(x)
    rows = [[p[k] for p in points] for k in range(n)] + [[Fraction(1)] * len(points)]
    return find_feasible(rows, list(x) + [Fraction(1)], [1] * len(points), solution=False)


def possible_edges(t: RootType) -> list[tuple[str, tuple]]:
    """Every edge a ``t``-graph may contain, as ``(kind, payload)``."""
    pairs = [(i, j) for i in range(1, t.n + 1) for j in range(1, i)]
    out = [("neg", p) for p in pairs]
    if t.kind != "A":
        out += [("pos", p) for p in pairs]
    if t.kind == "B":
        out += [("half", i) for i in range(1, t.n + 1)]
    if t.kind == "C":
        out += [("loop", i) for i in range(1, t.n + 1)]
    return out


def enumerate_graphs(t: RootType, max_edges: int) -> Iterator[SignedGraph]:
    """All ``t``-graphs (labelled) with at most ``max_edges`` edges."""
    pool = possible_edges(t)
    for k in range(min(max_edges, len(pool)) + 1):
        for chosen in combinations(pool, k):
            parts = {"neg": [], "pos": [], "half": [], "loop": []}
            for kind, payload in chosen:
                parts[kind].append(payload)
            yield SignedGraph(t, parts["neg"], parts["pos"], parts["half"], parts["loop"])
