"""Signed graphs and their bijection with positive roots.

Terminology follows the tournament reading, which reverses the usual
signed-graph literature: a *negative* edge ``{i, j}`` is a competitive game and
maps to the root ``e_i - e_j``; a *positive* edge is a cooperative game and maps
to ``e_i + e_j``.  Half-edges (type B) map to ``e_i`` and loops (type C) to
``2 e_i``.  In the usual literature the two pair-edge signs are swapped.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import EdgeNotFoundError, UnsupportedTypeError
from .roots import RootType

NEG, POS, HALF, LOOP = "neg", "pos", "half", "loop"
EDGE_KINDS = (NEG, POS, HALF, LOOP)


class Edge(NamedTuple):
    """One edge.  Pair edges store ``i > j`` (1-based); solitaire edges use ``j = 0``."""

    kind: str
    i: int
    j: int = 0

    @property
    def key(self) -> str:
        if self.kind in (NEG, POS):
            return f"{self.kind}:{self.i}-{self.j}"
        return f"{self.kind}:{self.i}"

    @classmethod
    def parse(cls, key: str) -> "Edge":
        kind, _, rest = key.partition(":")
        if kind not in EDGE_KINDS or not rest:
            raise ValueError(f"bad edge key {key!r}")
        if kind in (NEG, POS):
            a, _, b = rest.partition("-")
            a, b = int(a), int(b)
            return cls(kind, max(a, b), min(a, b))
        return cls(kind, int(rest))

    def __str__(self) -> str:
        return self.key


def _pairs(pairs: Iterable) -> frozenset:
    return frozenset((max(a, b), min(a, b)) for a, b in (tuple(p) for p in pairs))


@dataclass(frozen=True)
class SignedGraph:
    """Vertex set ``[n]`` with negative/positive pair edges, half-edges and loops.

    Pairs are normalized to ``(i, j)`` with ``i >= j`` on construction.  The same
    pair may carry both a negative and a positive edge (a *digon*).
    Construction never raises on invariant violations; see :func:`validate`.
    """

    root_type: RootType
    neg_edges: frozenset = field(default_factory=frozenset)
    pos_edges: frozenset = field(default_factory=frozenset)
    half_edges: frozenset = field(default_factory=frozenset)
    loops: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "neg_edges", _pairs(self.neg_edges))
        object.__setattr__(self, "pos_edges", _pairs(self.pos_edges))
        object.__setattr__(self, "half_edges", frozenset(self.half_edges))
        object.__setattr__(self, "loops", frozenset(self.loops))

    @property
    def n(self) -> int:
        return self.root_type.n

    @property
    def kind(self) -> str:
        return self.root_type.kind

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Canonical order: negative pairs, positive pairs, half-edges, loops; each sorted."""
        return (
            tuple(Edge(NEG, i, j) for i, j in sorted(self.neg_edges))
            + tuple(Edge(POS, i, j) for i, j in sorted(self.pos_edges))
            + tuple(Edge(HALF, i) for i in sorted(self.half_edges))
            + tuple(Edge(LOOP, i) for i in sorted(self.loops))
        )

    @cached_property
    def edge_index(self) -> dict:
        return {e: k for k, e in enumerate(self.edges)}

    def __len__(self) -> int:
        return len(self.edges)

    def without_half_edges(self) -> "SignedGraph":
        return SignedGraph(self.root_type, self.neg_edges, self.pos_edges, frozenset(), self.loops)

    def is_sign_symmetric(self) -> bool:
        """Every pair carries both a negative and a positive edge, or neither."""
        return self.neg_edges == self.pos_edges

    def to_json(self) -> dict:
        return {
            "root_type": self.root_type.to_json(),
            "neg_edges": [list(p) for p in sorted(self.neg_edges)],
            "pos_edges": [list(p) for p in sorted(self.pos_edges)],
            "half_edges": sorted(self.half_edges),
            "loops": sorted(self.loops),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SignedGraph":
        g = cls(
            RootType.from_json(data["root_type"]),
            data.get("neg_edges", ()),
            data.get("pos_edges", ()),
            data.get("half_edges", ()),
            data.get("loops", ()),
        )
        problems = validate(g)
        if problems:
            raise ValueError("invalid signed graph: " + "; ".join(problems))
        return g


def validate(g: SignedGraph) -> list[str]:
    """Return the violated invariants of ``g`` (empty list when valid)."""
    problems = []
    n, kind = g.n, g.kind
    for label, pairs in (("negative", g.neg_edges), ("positive", g.pos_edges)):
        for i, j in sorted(pairs):
            if i == j:
                problems.append(f"{label} edge {{{i},{j}}} is not a pair")
            if not (1 <= j and i <= n):
                problems.append(f"{label} edge {{{i},{j}}} has an endpoint outside [1,{n}]")
    for label, verts in (("half-edge", g.half_edges), ("loop", g.loops)):
        for i in sorted(verts):
            if not 1 <= i <= n:
                problems.append(f"{label} at {i} lies outside [1,{n}]")
    if kind in ("C", "D", "A") and g.half_edges:
        problems.append(f"half-edges forbidden in {kind}")
    if kind in ("B", "D", "A") and g.loops:
        problems.append(f"loops forbidden in {kind}")
    if kind == "A" and g.pos_edges:
        problems.append("positive edges forbidden in A")
    return problems


def gamma(g: SignedGraph, e: Edge) -> tuple[int, ...]:
    """The positive root attached to edge ``e``."""
    if e not in g.edge_index:
        raise EdgeNotFoundError(f"{e.key} is not an edge of the graph")
    return root_vector(e, g.n)


def root_vector(e: Edge, n: int) -> tuple[int, ...]:
    v = [0] * n
    if e.kind == NEG:
        v[e.i - 1], v[e.j - 1] = 1, -1
    elif e.kind == POS:
        v[e.i - 1], v[e.j - 1] = 1, 1
    elif e.kind == HALF:
        v[e.i - 1] = 1
    else:
        v[e.i - 1] = 2
    return tuple(v)


def complete_graph(t: RootType) -> SignedGraph:
    """``K_Φ``: every pair edge of both signs, plus half-edges (B) or loops (C)."""
    if t.kind not in ("B", "C", "D"):
        raise UnsupportedTypeError(f"complete graph not supported for {t}")
    pairs = frozenset((i, j) for i in range(1, t.n + 1) for j in range(1, i))
    everyone = frozenset(range(1, t.n + 1))
    return SignedGraph(
        t, pairs, pairs,
        everyone if t.kind == "B" else frozenset(),
        everyone if t.kind == "C" else frozenset(),
    )


def switching_signs(g: SignedGraph) -> list[int] | None:
    """A vertex signing witnessing balance of the pair edges, or ``None``.

    Negative edges need equal signs at both ends, positive edges opposite signs.
    Solitaire edges are ignored here.
    """
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in g.neg_edges:
        adj[i].append((j, 1))
        adj[j].append((i, 1))
    for i, j in g.pos_edges:
        adj[i].append((j, -1))
        adj[j].append((i, -1))
    sigma = [0] * (g.n + 1)
    for root in range(1, g.n + 1):
        if sigma[root]:
            continue
        sigma[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, rel in adj[v]:
                want = sigma[v] * rel
                if not sigma[w]:
                    sigma[w] = want
                    queue.append(w)
                elif sigma[w] != want:
                    return None
    return sigma[1:]


def is_balanced(g: SignedGraph, drop_half_edges: bool = False) -> bool:
    """No loops, no half-edges, and every cycle has an even number of positive edges.

    With ``drop_half_edges`` the test applies to ``G'`` (the graph with its
    half-edges removed), which is what integer realization needs.
    """
    if g.loops:
        return False
    if g.half_edges and not drop_half_edges:
        return False
    return switching_signs(g) is not None


def incidence_matrix(g: SignedGraph) -> list[list[int]]:
    """``n x |E|`` integer matrix whose columns are the roots of the edges."""
    cols = [root_vector(e, g.n) for e in g.edges]
    return [[c[r] for c in cols] for r in range(g.n)]


def switch_vertex(g: SignedGraph, v: int) -> SignedGraph:
    """Swap the sign of every pair edge at ``v``."""
    def touches(p):
        return v in p
    neg = {p for p in g.neg_edges if not touches(p)} | {p for p in g.pos_edges if touches(p)}
    pos = {p for p in g.pos_edges if not touches(p)} | {p for p in g.neg_edges if touches(p)}
    return SignedGraph(g.root_type, neg, pos, g.half_edges, g.loops)
