"""Integer points of the translated zonotope and deterministic realization.

On a graph whose pair edges form a balanced signed graph the incidence matrix
is totally unimodular, so every integer point ``t`` of ``Z_G + rho_G`` is the
score ``I(G) p`` of some 0/1 vector ``p``.  ``realize_deterministic`` finds one:
an exact LP solution is pushed along column dependencies of its fractional
part until nothing fractional is left.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .errors import ComplexityError, InfeasibleError, PreconditionError
from .oracle import OracleBudget, _bit_chunks, enumerate_deterministic_targets
from .rational import parse_rational
from .score import Tournament, _inequalities, rho_graph
from .sgraph import SignedGraph, incidence_matrix, is_balanced
from .simplex import find_feasible

ZERO = Fraction(0)


def _integer_target(t: Sequence) -> tuple[int, ...]:
    out = []
    for v in t:
        q = parse_rational(v)
        if q.denominator != 1:
            raise ValueError(f"target entries must be integers, got {q}")
        out.append(int(q))
    return tuple(out)


def nullspace_vector(columns: Sequence[Sequence[Fraction]]) -> list[Fraction] | None:
    """A nonzero ``c`` with ``sum_k c_k * columns[k] = 0``, or ``None`` if independent.

    Exact Gaussian elimination on the matrix whose columns are given.
    """
    k = len(columns)
    if k == 0:
        return None
    m = len(columns[0])
    rows = [[Fraction(columns[c][r]) for c in range(k)] for r in range(m)]
    pivots = []  # pivot column per reduced row
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = next((c for c in range(k) if c not in pivots), None)
    if free is None:
        return None
    vec = [ZERO] * k
    vec[free] = Fraction(1)
    for row_idx, pc in enumerate(pivots):
        vec[pc] = -rows[row_idx][free]
    return vec


def round_to_vertex(inc: Sequence[Sequence[int]], p: Sequence[Fraction]) -> tuple[list[Fraction], int]:
    """Move ``p`` inside ``{I p = const, 0 <= p <= 1}`` until it is 0/1.

    Returns the rounded point and the number of dependency steps taken.
    Raises ``InfeasibleError`` if the fractional columns become independent,
    which cannot happen for a totally unimodular ``inc``.
    """
    p = [Fraction(v) for v in p]
    steps = 0
    while True:
        frac = [k for k, v in enumerate(p) if v.denominator != 1]
        if not frac:
            return p, steps
        c = nullspace_vector([[row[k] for row in inc] for k in frac])
        if c is None:
            raise InfeasibleError("fractional point with independent support; matrix is not TU")
        alpha = min(
            (1 - p[k]) / ck if ck > 0 else -p[k] / ck
            for k, ck in zip(frac, c)
            if ck
        )
        for k, ck in zip(frac, c):
            p[k] += alpha * ck
        steps += 1


def realize_deterministic(g: SignedGraph, t: Sequence) -> Tournament:
    """A 0/1 tournament on ``g`` whose translated score ``I(G) p`` equals ``t``.

    Requires ``G'`` (``g`` without half-edges) to be balanced.
    """
    target = _integer_target(t)
    if len(target) != g.n:
        raise ValueError(f"expected {g.n} target entries, got {len(target)}")
    if not is_balanced(g, drop_half_edges=True):
        raise PreconditionError("integer realization needs G' (half-edges removed) to be balanced")
    edges = g.edges
    if not edges:
        if any(target):
            raise InfeasibleError(f"{list(target)} is not a translated score of the empty graph")
        return Tournament(g, {})
    inc = incidence_matrix(g)
    p = find_feasible(inc, target, [1] * len(edges))
    if p is None:
        raise InfeasibleError(f"{list(target)} lies outside the translated zonotope")
    p, _ = round_to_vertex(inc, p)
    return Tournament(g, dict(zip(edges, p)))


def search_deterministic(g: SignedGraph, t: Sequence, budget: OracleBudget = OracleBudget()):
    """Brute-force 0/1 search (any graph within ``budget``); a Tournament or ``None``."""
    budget.check(g)
    target = np.array(_integer_target(t), dtype=np.int64)
    m = len(g.edges)
    if m == 0:
        return Tournament(g, {}) if not target.any() else None
    inc = np.array(incidence_matrix(g), dtype=np.int64)
    for bits in _bit_chunks(m):
        hits = np.flatnonzero((bits @ inc.T == target).all(axis=1))
        if len(hits):
            row = bits[hits[0]]
            return Tournament(g, {e: Fraction(int(b)) for e, b in zip(g.edges, row)})
    return None


def lattice_box(g: SignedGraph) -> list[tuple[int, int]]:
    """Per-coordinate range of ``I(G) p`` over the cube."""
    inc = incidence_matrix(g)
    return [(sum(min(0, a) for a in row), sum(max(0, a) for a in row)) for row in inc]


def lattice_points(g: SignedGraph, max_points: int = 10**6) -> set:
    """All integer ``t`` with ``t - rho_G`` in the zonotope ``Z_G``."""
    box = lattice_box(g)
    size = 1
    for lo, hi in box:
        size *= hi - lo + 1
    if size > max_points:
        raise ComplexityError(f"lattice box has {size} points, cap is {max_points}")
    if g.n == 0:
        return {()}
    pts = np.array(list(product(*(range(lo, hi + 1) for lo, hi in box))), dtype=np.int64)
    ineq = _inequalities(g)
    if ineq:
        w = np.array([d for d, _ in ineq], dtype=np.int64)
        two_h = np.array([h for _, h in ineq], dtype=np.int64)
        two_rho = np.array([int(2 * r) for r in rho_graph(g)], dtype=np.int64)
        y = 2 * pts - two_rho  # 2 (t - rho)
        if g.is_sign_symmetric():  # unsigned directions act on |x|
            y = np.abs(y)
        ok = (y @ w.T <= two_h).all(axis=1)
        pts = pts[ok]
    return {tuple(int(v) for v in row) for row in pts}


def corner_offset(g: SignedGraph) -> tuple[int, ...]:
    """``c - rho_G`` where ``c = 1/2 * sum_e |root(e)|`` puts the box corner at the origin.

    Some texts translate by ``c`` instead of ``rho_G``; both give integer
    deterministic scores and differ by this integer vector.
    """
    inc = incidence_matrix(g)
    return tuple(-sum(min(0, a) for a in row) for row in inc)


def random_only_points(
    g: SignedGraph, max_n: int = 4, max_edges: int = 8, translation: str = "rho"
) -> list[tuple[int, ...]]:
    """Integer points of ``Z_G + rho_G`` that no deterministic tournament reaches.

    ``translation="corner"`` reports them shifted by :func:`corner_offset`.
    """
    if translation not in ("rho", "corner"):
        raise ValueError(f"unknown translation {translation!r}")
    if g.n > max_n or len(g.edges) > max_edges:
        raise ComplexityError(
            f"random_only_points is capped at n <= {max_n}, |E| <= {max_edges}; "
            f"got n = {g.n}, |E| = {len(g.edges)}"
        )
    reachable = enumerate_deterministic_targets(g, OracleBudget(max_edges=max_edges, max_n=max_n))
    points = sorted(lattice_points(g) - reachable)
    if translation == "corner":
        off = corner_offset(g)
        points = [tuple(a + b for a, b in zip(p, off)) for p in points]
    return points
