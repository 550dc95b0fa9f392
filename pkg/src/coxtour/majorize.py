"""Weak sub-majorization and constructive transfer matrices, in exact arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import InfeasibleError
from .roots import RootType, delta_of

Matrix = list  # list[list[Fraction]]


def _check_lengths(x, y):
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def _partial_sums_desc(v: Sequence[Fraction]) -> list[Fraction]:
    out, s = [], Fraction(0)
    for a in sorted(v, reverse=True):
        s += a
        out.append(s)
    return out


def first_violation(x: Sequence[Fraction], y: Sequence[Fraction], strict: bool = False):
    """First ``k`` (1-based) where the top-k sum of ``x`` breaks the bound from ``y``.

    Returns ``(k, sum_x, sum_y)`` or ``None``.
    """
    _check_lengths(x, y)
    for k, (sx, sy) in enumerate(zip(_partial_sums_desc(x), _partial_sums_desc(y)), 1):
        if sx > sy or (strict and sx == sy):
            return k, sx, sy
    return None


def weak_submajorizes(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    """``x ≼_w y``: every top-k partial sum of ``x`` is at most that of ``y``."""
    return first_violation(x, y) is None


def strict_weak_submajorizes(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    """``x ≺_w y``: strict inequality for every ``k``."""
    return first_violation(x, y, strict=True) is None


def majorizes(y: Sequence[Fraction], x: Sequence[Fraction]) -> bool:
    """``x ≼ y`` (ordinary majorization: weak plus equal totals)."""
    return weak_submajorizes(x, y) and sum(x) == sum(y)


def phi_ell_feasible(x: Sequence[Fraction], t: RootType) -> bool:
    """Threshold form of ``|x| ≼_w rho``.

    For every level ``ell = delta + m`` (``m = 0..n-1``) the total excess
    ``sum (|x_i| - ell)^+`` may not exceed ``C(n - m, 2)``.
    """
    d = delta_of(t)
    n = t.n
    if len(x) != n:
        raise ValueError(f"expected {n} scores, got {len(x)}")
    absx = [abs(Fraction(v)) for v in x]
    for m in range(n):
        ell = d + m
        excess = sum((a - ell for a in absx if a > ell), Fraction(0))
        if excess > comb(n - m, 2):
            return False
    return True


def dominating_vector(x_abs: Sequence[Fraction], y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Some ``u >= x_abs`` (componentwise) with ``u ≼ y`` and ``sum(u) == sum(y)``.

    Water-filling: the smallest entries of ``x_abs`` are raised to a common
    level ``c`` until the total reaches ``sum(y)``.
    """
    _check_lengths(x_abs, y)
    if any(a < 0 for a in x_abs) or any(b < 0 for b in y):
        raise ValueError("dominating_vector expects nonnegative vectors")
    if not weak_submajorizes(x_abs, y):
        raise InfeasibleError("x is not weakly sub-majorized by y")
    n = len(y)
    if n == 0:
        return ()
    total = sum(y, Fraction(0))
    desc = sorted(x_abs, reverse=True)
    head = Fraction(0)
    level = None
    for m in range(n + 1):
        if m == n:
            level = None  # totals already equal
            break
        c = (total - head) / (n - m)
        if (m == 0 or desc[m - 1] >= c) and desc[m] <= c:
            level = c
            break
        head += desc[m]
    if level is None:
        return tuple(Fraction(a) for a in x_abs)
    return tuple(max(Fraction(a), level) for a in x_abs)


@dataclass(frozen=True)
class TransferMatrix:
    """A doubly sub-stochastic ``n x n`` matrix (``entries[i][j]``)."""

    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def apply(self, y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return mat_vec(self.entries, y)

    def is_doubly_substochastic(self) -> bool:
        return is_doubly_substochastic(self.entries)


def mat_vec(m, y) -> tuple[Fraction, ...]:
    return tuple(sum((a * b for a, b in zip(row, y)), Fraction(0)) for row in m)


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def is_doubly_substochastic(m) -> bool:
    n = len(m)
    if any(a < 0 for row in m for a in row):
        return False
    if any(sum(row) > 1 for row in m):
        return False
    return all(sum(m[i][j] for i in range(n)) <= 1 for j in range(n))


def is_doubly_stochastic(m) -> bool:
    n = len(m)
    if any(a < 0 for row in m for a in row):
        return False
    return all(sum(row) == 1 for row in m) and all(sum(m[i][j] for i in range(n)) == 1 for j in range(n))


def t_transform_chain(u: Sequence[Fraction], y: Sequence[Fraction]):
    """Doubly stochastic ``D`` with ``D y = u`` for ``u ≼ y``, plus the step count.

    Works on the decreasing rearrangements.  Each step picks the last index
    ``j`` where the current vector still exceeds ``u`` and the first later
    index ``k`` where it falls short, and moves ``min(excess, shortfall)``
    from ``j`` to ``k`` (a T-transform).  Every step closes at least one gap,
    so at most ``n - 1`` steps are taken.
    """
    _check_lengths(u, y)
    n = len(y)
    if not majorizes(y, u):
        raise InfeasibleError("u is not majorized by y")
    order_y = sorted(range(n), key=lambda i: (-y[i], i))
    order_u = sorted(range(n), key=lambda i: (-u[i], i))
    cur = [Fraction(y[i]) for i in order_y]
    target = [Fraction(u[i]) for i in order_u]
    dsorted = identity(n)
    steps = 0
    while cur != target:
        j = max(i for i in range(n) if cur[i] > target[i])
        k = min(i for i in range(j + 1, n) if cur[i] < target[i])
        move = min(cur[j] - target[j], target[k] - cur[k])
        mix = move / (cur[j] - cur[k])  # weight on the transposition
        row_j, row_k = dsorted[j], dsorted[k]
        new_j = [(1 - mix) * a + mix * b for a, b in zip(row_j, row_k)]
        new_k = [mix * a + (1 - mix) * b for a, b in zip(row_j, row_k)]
        dsorted[j], dsorted[k] = new_j, new_k
        cur[j] -= move
        cur[k] += move
        steps += 1
    d = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            d[order_u[a]][order_y[b]] = dsorted[a][b]
    return d, steps


def transfer_factors(x_abs: Sequence[Fraction], y: Sequence[Fraction]):
    """``(S, D, u)`` with ``S = diag(x_abs / u) D`` and ``D y = u``.

    ``D`` is doubly stochastic, so ``D - S`` is a nonnegative completion of
    ``S`` to a doubly stochastic matrix whose rows are proportional to the
    rows of ``S``.
    """
    x_abs = tuple(Fraction(a) for a in x_abs)
    y = tuple(Fraction(b) for b in y)
    u = dominating_vector(x_abs, y)
    d, _ = t_transform_chain(u, y)
    s = [
        [x_abs[i] / u[i] * a for a in d[i]] if u[i] else [Fraction(0)] * len(y)
        for i in range(len(y))
    ]
    return s, d, u


def transfer_matrix(x_abs: Sequence[Fraction], y: Sequence[Fraction]) -> TransferMatrix:
    """Doubly sub-stochastic ``S`` with ``S y = x_abs`` exactly (requires ``x_abs ≼_w y``)."""
    s, _, _ = transfer_factors(x_abs, y)
    return TransferMatrix(tuple(tuple(row) for row in s))
