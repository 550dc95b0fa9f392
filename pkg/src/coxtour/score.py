"""Random Coxeter tournaments, mean score sequences and membership tests.

A tournament stores one probability per edge of its graph.  For a negative
edge ``{i, j}`` with ``i > j`` the stored value is the probability that the
higher-numbered player ``i`` wins; the other orientation is its complement.
A positive edge stores the probability that the joint game is won, and a
solitaire edge the probability that its player wins.

Membership is decided through the support function of the zonotope: for each
admissible signed subset ``S`` with direction ``w``, the bound is
``h(S) = 1/2 * sum_e |<w, root(e)>|``.  When every pair carries both edge
signs or neither, ``h`` depends only on the unsigned subset and the test
reduces to ``sum_{i in S} |x_i| <= h(S)`` over the ``2**n`` subsets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import ComplexityError
from .majorize import first_violation, weak_submajorizes
from .rational import common_denominator, parse_rational, to_vector
from .roots import AdmissibleSubset, RootType, require_bcd, rho_complete
from .sgraph import HALF, LOOP, NEG, POS, Edge, SignedGraph, root_vector

HALF_Q = Fraction(1, 2)

MAX_N = 20
MAX_N_SIGNED = 12


@dataclass
class Tournament:
    """A random tournament on ``graph``: ``probs`` maps every edge to a value in [0, 1]."""

    graph: SignedGraph
    probs: dict = field(default_factory=dict)

    def __post_init__(self):
        probs = {}
        for e, p in self.probs.items():
            if isinstance(e, str):
                e = Edge.parse(e)
            probs[e] = parse_rational(p)
        edges = set(self.graph.edges)
        missing = edges - probs.keys()
        extra = probs.keys() - edges
        if missing or extra:
            raise ValueError(
                "probabilities must cover exactly the graph's edges; "
                f"missing {sorted(e.key for e in missing)}, extra {sorted(e.key for e in extra)}"
            )
        for e, p in probs.items():
            if not 0 <= p <= 1:
                raise ValueError(f"probability {p} on {e.key} is outside [0, 1]")
        self.probs = {e: probs[e] for e in self.graph.edges}

    @property
    def deterministic(self) -> bool:
        return all(p in (0, 1) for p in self.probs.values())

    def __getitem__(self, e: Edge | str) -> Fraction:
        if isinstance(e, str):
            e = Edge.parse(e)
        return self.probs[e]

    def beats(self, i: int, j: int) -> Fraction:
        """Probability that ``i`` wins the competitive game against ``j``."""
        p = self.probs[Edge(NEG, max(i, j), min(i, j))]
        return p if i > j else 1 - p

    def complement(self) -> "Tournament":
        return Tournament(self.graph, {e: 1 - p for e, p in self.probs.items()})

    def to_json(self, with_mean_score: bool = True) -> dict:
        out = {
            "graph": self.graph.to_json(),
            "probs": {e.key: str(p) for e, p in self.probs.items()},
        }
        if with_mean_score:
            out["mean_score"] = [str(v) for v in mean_score(self)]
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Tournament":
        return cls(SignedGraph.from_json(data["graph"]), dict(data["probs"]))


def uniform_tournament(g: SignedGraph, p: Fraction = HALF_Q) -> Tournament:
    return Tournament(g, {e: Fraction(p) for e in g.edges})


def mean_score(t: Tournament) -> tuple[Fraction, ...]:
    """``x = sum_e (p_e - 1/2) * root(e)``, exactly."""
    n = t.graph.n
    x = [Fraction(0)] * n
    for e, p in t.probs.items():
        w = p - HALF_Q
        if not w:
            continue
        if e.kind == NEG:
            x[e.i - 1] += w
            x[e.j - 1] -= w
        elif e.kind == POS:
            x[e.i - 1] += w
            x[e.j - 1] += w
        elif e.kind == HALF:
            x[e.i - 1] += w
        else:
            x[e.i - 1] += 2 * w
    return tuple(x)


def rho_graph(g: SignedGraph) -> tuple[Fraction, ...]:
    """Half the sum of the graph's roots (the translation to ``Z_G^tr``)."""
    acc = [0] * g.n
    for e in g.edges:
        for k, c in enumerate(root_vector(e, g.n)):
            acc[k] += c
    return tuple(Fraction(a, 2) for a in acc)


def h_value(g: SignedGraph, s: Iterable[int]) -> Fraction:
    """Edge-count form of ``h`` on an unsigned subset ``s`` of ``[n]`` (1-based).

    ``E1-/2 + E1+/2 + E2+`` plus ``H/2`` (B) or ``L`` (C), where ``Ek±``
    counts pair edges with exactly ``k`` endpoints in ``s``.  This is the
    bound for the all-plus signing of ``s``.
    """
    require_bcd(g.root_type)
    s = frozenset(s)
    e1_neg = sum(1 for p in g.neg_edges if len(s.intersection(p)) == 1)
    e1_pos = sum(1 for p in g.pos_edges if len(s.intersection(p)) == 1)
    e2_pos = sum(1 for p in g.pos_edges if len(s.intersection(p)) == 2)
    val = Fraction(e1_neg + e1_pos, 2) + e2_pos
    if g.kind == "B":
        val += Fraction(len(s & g.half_edges), 2)
    elif g.kind == "C":
        val += len(s & g.loops)
    return val


def h_signed(g: SignedGraph, s: AdmissibleSubset) -> Fraction:
    """Support function of ``Z_G`` in the direction of the admissible subset ``s``."""
    require_bcd(g.root_type)
    w = s.weight(g.n)
    return Fraction(_two_h(g, w), 2)


def _two_h(g: SignedGraph, w: Sequence[int]) -> int:
    total = 0
    for i, j in g.neg_edges:
        total += abs(w[i - 1] - w[j - 1])
    for i, j in g.pos_edges:
        total += abs(w[i - 1] + w[j - 1])
    for i in g.half_edges:
        total += abs(w[i - 1])
    for i in g.loops:
        total += 2 * abs(w[i - 1])
    return total


@lru_cache(maxsize=8192)
def _inequalities(g: SignedGraph) -> tuple:
    """``(directions, 2h)`` pairs; unsigned 0/1 directions for sign-symmetric graphs."""
    n = g.n
    signs = (0, 1) if g.is_sign_symmetric() else (0, 1, -1)
    out = []
    for w in product(signs, repeat=n):
        if any(w):
            out.append((w, _two_h(g, w)))
    return tuple(out)


def _check_size(g: SignedGraph, max_n: int) -> None:
    cap = max_n if g.is_sign_symmetric() else min(max_n, MAX_N_SIGNED)
    if g.n > cap:
        raise ComplexityError(
            f"exhaustive membership needs n <= {cap} for this graph, got n = {g.n}"
        )


def violated_subset(g: SignedGraph, x: Sequence, max_n: int = MAX_N) -> AdmissibleSubset | None:
    """The first admissible subset whose inequality ``x`` violates, or ``None``."""
    require_bcd(g.root_type)
    x = to_vector(x)
    if len(x) != g.n:
        raise ValueError(f"expected {g.n} scores, got {len(x)}")
    _check_size(g, max_n)
    symmetric = g.is_sign_symmetric()
    den = common_denominator(x)
    xs = [v.numerator * (den // v.denominator) for v in x]
    if symmetric:
        xs = [abs(v) for v in xs]
    for w, two_h in _inequalities(g):
        if 2 * sum(a * b for a, b in zip(w, xs) if a) > den * two_h:
            if symmetric:  # report the signing that attains the maximum
                plus = [i + 1 for i in range(g.n) if w[i] and x[i] >= 0]
                minus = [i + 1 for i in range(g.n) if w[i] and x[i] < 0]
            else:
                plus = [i + 1 for i in range(g.n) if w[i] == 1]
                minus = [i + 1 for i in range(g.n) if w[i] == -1]
            return AdmissibleSubset(frozenset(plus), frozenset(minus))
    return None


def is_mean_score(g: SignedGraph, x: Sequence, max_n: int = MAX_N) -> bool:
    """Whether ``x`` is the mean score sequence of some random tournament on ``g``."""
    return violated_subset(g, x, max_n) is None


def is_mean_score_complete(t: RootType, x: Sequence) -> bool:
    """Membership on ``K_Φ``: ``|x|`` weakly sub-majorized by ``rho``."""
    rho = rho_complete(t)
    x = to_vector(x)
    if len(x) != t.n:
        raise ValueError(f"expected {t.n} scores, got {len(x)}")
    return weak_submajorizes([abs(v) for v in x], rho)


def complete_violation(t: RootType, x: Sequence):
    """``(k, top-k sum of |x|, top-k sum of rho)`` for the first broken bound, or ``None``."""
    x = to_vector(x)
    return first_violation([abs(v) for v in x], rho_complete(t))


def is_translated_lattice_point(g: SignedGraph, tvec: Sequence[int], max_n: int = MAX_N) -> bool:
    """Whether ``tvec - rho_G`` is a mean score sequence on ``g``."""
    rho = rho_graph(g)
    return is_mean_score(g, [Fraction(a) - r for a, r in zip(tvec, rho)], max_n)
