"""Greedy (Havel-Hakimi style) construction of tournaments on ``K_Φ``.

Each step settles every game of the most extreme remaining player.  Picture
the other players as particles at ``|x_j|``, each allowed to travel at most one
unit.  A slider moves from the right towards ``-1`` and drags particles along;
left of the origin a particle is counted twice (it gives points in both game
types at once).  The slider stops at ``gamma*`` where the total distance equals
what the extreme player has to concede.  The distances become the
probabilities of that player's pair games.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InfeasibleError
from .rational import to_vector
from .roots import RootType, delta_of, require_bcd
from .score import Tournament, complete_violation
from .sgraph import HALF, LOOP, NEG, POS, Edge, complete_graph

ZERO, ONE, HALF_Q = Fraction(0), Fraction(1), Fraction(1, 2)


def _overlap(lo: Fraction, hi: Fraction, a: Fraction, b: Fraction) -> Fraction:
    """Length of ``[lo, hi] ∩ [a, b]``."""
    return max(ZERO, min(hi, b) - max(lo, a))


def right_length(a: Fraction, gamma: Fraction) -> Fraction:
    """``length([a - 1, a] ∩ [gamma, ∞))``."""
    return max(ZERO, a - max(gamma, a - 1))


def left_length(a: Fraction, gamma: Fraction) -> Fraction:
    """``length([a - 1, a] ∩ [gamma, 0])`` (zero when ``gamma > 0``)."""
    if gamma >= 0:
        return ZERO
    return _overlap(a - 1, a, gamma, ZERO)


def slider_total(abs_scores: Sequence[Fraction], gamma: Fraction) -> Fraction:
    return sum((right_length(a, gamma) + left_length(a, gamma) for a in abs_scores), ZERO)


def solve_gamma_star(abs_scores: Sequence[Fraction], target: Fraction) -> Fraction:
    """Largest ``gamma >= -1`` with ``slider_total(abs_scores, gamma) == target``.

    The total is piecewise linear and non-increasing, with breakpoints among
    ``|x_j|``, ``|x_j| - 1``, ``0`` and ``-1``; the root is found by scanning
    them from the right and interpolating exactly.
    """
    abs_scores = [Fraction(a) for a in abs_scores]
    target = Fraction(target)
    lowest = Fraction(-1)
    cap = slider_total(abs_scores, lowest)
    if target < 0 or target > cap:
        raise InfeasibleError(f"slider target {target} outside [0, {cap}]")
    points = {lowest, ZERO}
    for a in abs_scores:
        points.update((a, a - 1))
    grid = sorted((p for p in points if p >= lowest), reverse=True)
    prev_g, prev_v = None, None
    for g in grid:
        v = slider_total(abs_scores, g)
        if v >= target:
            if v == target or prev_g is None:
                return g
            # linear on [g, prev_g]
            return prev_g - (target - prev_v) * (prev_g - g) / (v - prev_v)
        prev_g, prev_v = g, v
    raise AssertionError("slider total never reached the target")  # cap check makes this unreachable


@dataclass(frozen=True)
class HHStep:
    """Outcome of settling the last player of a ``|x|``-sorted vector of length ``m``.

    ``minus[j]`` / ``plus[j]`` are the extreme player's win probabilities in the
    competitive / cooperative game against local player ``j`` (0-based,
    ``j < m - 1``).  ``solitaire`` is ``None`` in type D.  ``case`` is one of
    ``"1a"``, ``"1b"`` (extreme player negative), ``"2a"``, ``"2b"`` (positive),
    ``"zero"`` or ``"base"``.
    """

    case: str
    gamma_star: Fraction | None
    minus: tuple
    plus: tuple
    solitaire: Fraction | None
    x_prime: tuple

    @property
    def complemented(self) -> bool:
        """Case 2 steps are naturally described by the losing probabilities ``q = 1 - p``."""
        return self.case in ("2a", "2b")


def hh_step(t: RootType, x: Sequence) -> HHStep:
    """Settle every game of the last (most extreme) player of ``x``.

    ``x`` must be sorted by absolute value, ascending, and satisfy the
    complete-graph membership condition for rank ``len(x)``.
    """
    require_bcd(t)
    x = to_vector(x)
    m = len(x)
    sub = RootType(t.kind, m)
    bad = complete_violation(sub, x)
    if bad:
        k, lhs, rhs = bad
        raise InfeasibleError(f"top-{k} sum of |x| is {lhs} > {rhs}")
    if any(abs(x[j]) > abs(x[j + 1]) for j in range(m - 1)):
        raise ValueError("hh_step expects scores sorted by absolute value")
    delta = delta_of(t)
    solitaire_kind = t.kind in ("B", "C")

    if m == 1:
        v = x[0]
        if t.kind == "B":
            sol = v + HALF_Q
        elif t.kind == "C":
            sol = (v + 1) / 2
        else:
            sol = None
        return HHStep("base", None, (), (), sol, ())

    xn = x[-1]
    if xn == 0:
        halves = (HALF_Q,) * (m - 1)
        return HHStep("zero", None, halves, halves, HALF_Q if solitaire_kind else None, x[:-1])

    others = x[:-1]
    abs_others = [abs(v) for v in others]
    target = m - 1 + delta - abs(xn)
    gamma = solve_gamma_star(abs_others, target)
    far = [right_length(a, gamma) for a in abs_others]
    near = [left_length(a, gamma) for a in abs_others]
    minus, plus, x_prime = [], [], []
    if xn < 0:
        # lose the solitaire; earn points from weak players by competing and
        # from strong players by cooperating, farthest first
        for v, f, c in zip(others, far, near):
            pm, pp = (f, c) if v < 0 else (c, f)
            minus.append(pm)
            plus.append(pp)
            x_prime.append(v + pm - pp)
        case = "1a" if gamma > 0 else "1b"
        sol = ZERO if solitaire_kind else None
    else:
        # mirror image: q = 1 - p is assigned by the same rule
        for v, f, c in zip(others, far, near):
            qp, qm = (f, c) if v < 0 else (c, f)
            minus.append(1 - qm)
            plus.append(1 - qp)
            x_prime.append(v - qm + qp)
        case = "2a" if gamma > 0 else "2b"
        sol = ONE if solitaire_kind else None
    return HHStep(case, gamma, tuple(minus), tuple(plus), sol, tuple(x_prime))


@dataclass(frozen=True)
class TraceRow:
    """One block of the construction trace, in original player numbering."""

    player: int
    score: Fraction
    step: HHStep
    opponents: tuple  # original indices matching step.minus / step.plus
    remaining: tuple  # (player, score) before the step, sorted by |score|


def _check_order(values: Sequence[Fraction], player: int) -> None:
    for a, b in zip(values, values[1:]):
        if abs(a) > abs(b):
            raise RuntimeError(
                f"order of |x'| not preserved after settling player {player}: {list(map(str, values))}"
            )


def hh_construct(t: RootType, x: Sequence, trace: list | None = None) -> Tournament:
    """A tournament on ``K_Φ`` whose mean score sequence is exactly ``x``.

    Players are processed by decreasing ``|x|``; ties go to the higher index
    first (stable ascending sort).  Pass a list as ``trace`` to receive one
    :class:`TraceRow` per step.
    """
    require_bcd(t)
    x = to_vector(x)
    if len(x) != t.n:
        raise ValueError(f"expected {t.n} scores, got {len(x)}")
    bad = complete_violation(t, x)
    if bad:
        k, lhs, rhs = bad
        raise InfeasibleError(
            f"not a mean score sequence on K_{t.kind}{t.n}: the {k} largest |x_i| sum to {lhs} > {rhs}"
        )
    g = complete_graph(t)
    order = sorted(range(1, t.n + 1), key=lambda i: abs(x[i - 1]))
    current = {i: x[i - 1] for i in order}
    probs: dict[Edge, Fraction] = {}

    while order:
        values = [current[i] for i in order]
        step = hh_step(t, values)
        me = order[-1]
        rest = order[:-1]
        if trace is not None:
            trace.append(TraceRow(me, current[me], step, tuple(rest), tuple(zip(order, values))))
        if step.solitaire is not None:
            probs[Edge(HALF if t.kind == "B" else LOOP, me)] = step.solitaire
        for j, pm, pp in zip(rest, step.minus, step.plus):
            hi, lo = max(me, j), min(me, j)
            probs[Edge(NEG, hi, lo)] = pm if me == hi else 1 - pm
            probs[Edge(POS, hi, lo)] = pp
        for j, v in zip(rest, step.x_prime):
            current[j] = v
        _check_order(step.x_prime, me)
        order = rest
    return Tournament(g, probs)


def format_trace(trace: Sequence[TraceRow]) -> str:
    """Plain-text table: one block per step, Case 2 blocks shown as ``q = 1 - p``."""
    lines = []
    for row in trace:
        step = row.step
        letter = "q" if step.complemented else "p"
        header = "  ".join(f"{pl}:{_dec(v)}" for pl, v in reversed(row.remaining))
        lines.append(f"[player {row.player}, x = {_dec(row.score)}, case {step.case}"
                     + (f", gamma* = {_dec(step.gamma_star)}]" if step.gamma_star is not None else "]"))
        lines.append("  scores  " + header)
        if step.solitaire is not None:
            val = 1 - step.solitaire if step.complemented else step.solitaire
            lines.append(f"  {letter}_{row.player}^sol = {_dec(val)}")
        for label, vals in (("-", step.minus), ("+", step.plus)):
            cells = []
            for j, p in sorted(zip(row.opponents, vals), reverse=True):
                val = 1 - p if step.complemented else p
                cells.append(f"{letter}_{row.player}{j}^{label}={_dec(val)}")
            if cells:
                lines.append("  " + "  ".join(cells))
    return "\n".join(lines)


def _dec(q: Fraction) -> str:
    """Short decimal when exact (``.275``), otherwise ``a/b``."""
    den = q.denominator
    while den % 2 == 0:
        den //= 2
    while den % 5 == 0:
        den //= 5
    if den != 1:
        return str(q)
    from decimal import Decimal
    s = format(Decimal(q.numerator) / Decimal(q.denominator), "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s
