"""Exact phase-one simplex for box-constrained feasibility.

Solves ``A x = b, 0 <= x <= upper`` over the rationals.  The tableau is kept in
fraction-free integer form: every entry is an integer over the common
denominator ``d`` (the determinant of the current basis), and each pivot
divides exactly.  Bounded variables sit at their lower or upper bound when
nonbasic, so the tableau has one row per equality constraint only.  Bland's
rule (smallest eligible index, smallest leaving index on ties) prevents cycling.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

_LOWER, _UPPER, _BASIC = 0, 1, 2


class Unbounded(ArithmeticError):
    pass


def _integer_rows(A, b):
    rows, rhs = [], []
    for row, bi in zip(A, b):
        bi = Fraction(bi)
        if all(type(a) is int for a in row):
            scale = bi.denominator
            irow = [a * scale for a in row] if scale != 1 else list(row)
        else:
            row = [Fraction(a) for a in row]
            scale = math.lcm(bi.denominator, *(a.denominator for a in row))
            irow = [int(a * scale) for a in row]
        ib = bi.numerator * (scale // bi.denominator)
        if ib < 0:
            irow = [-a for a in irow]
            ib = -ib
        rows.append(irow)
        rhs.append(ib)
    return rows, rhs


def find_feasible(
    A: Sequence[Sequence], b: Sequence, upper: Sequence | None = None, solution: bool = True
):
    """A point of ``{x : A x = b, 0 <= x <= upper}`` or ``None`` if empty.

    ``upper`` holds a nonnegative integer or ``None`` (no bound) per column;
    omitted means all ``None``.  With ``solution=False`` only a boolean is
    returned, which skips building the rational point.
    """
    m = len(A)
    nvar = len(A[0]) if m else (len(upper) if upper is not None else 0)
    if upper is None:
        upper = [None] * nvar
    if len(upper) != nvar:
        raise ValueError("upper bounds do not match the column count")
    for u in upper:
        if u is not None and (int(u) != u or u < 0):
            raise ValueError("upper bounds must be nonnegative integers or None")
    if m == 0:
        return [Fraction(0)] * nvar if solution else True

    rows, beta = _integer_rows(A, b)
    ncol = nvar + m
    tab = [row + [int(i == r) for i in range(m)] for r, row in enumerate(rows)]
    ub = [None if u is None else int(u) for u in upper] + [None] * m
    # reduced costs of "minimize sum of artificials" with artificials basic
    z = [-sum(tab[i][j] for i in range(m)) for j in range(nvar)] + [0] * m
    d = 1
    basis = list(range(nvar, ncol))
    status = [_LOWER] * nvar + [_BASIC] * m

    while True:
        enter = -1
        for j in range(nvar):
            if (status[j] == _LOWER and z[j] < 0) or (status[j] == _UPPER and z[j] > 0):
                enter = j
                break
        if enter < 0:
            break
        c = enter
        direction = 1 if status[c] == _LOWER else -1

        # ratio test; a ratio is kept as (numerator, positive denominator)
        best = None  # (num, den, variable index, row or -1, leaves at upper)
        if ub[c] is not None:
            best = (ub[c], 1, c, -1, False)
        for i in range(m):
            a = tab[i][c]
            if a == 0:
                continue
            var = basis[i]
            if direction * a > 0:  # basic variable decreases
                cand = (beta[i], abs(a), var, i, False)
            elif ub[var] is not None:
                cand = (ub[var] * d - beta[i], abs(a), var, i, True)
            else:
                continue
            if best is None:
                best = cand
                continue
            lhs, rhs = cand[0] * best[1], best[0] * cand[1]
            if lhs < rhs or (lhs == rhs and var < best[2]):
                best = cand
        if best is None:
            raise Unbounded("phase-one direction is unbounded")

        r, to_upper = best[3], best[4]
        if r < 0:
            # entering variable runs into its own bound: a bound flip, no pivot
            u = ub[c]
            sign = -1 if direction == 1 else 1
            for i in range(m):
                beta[i] += sign * tab[i][c] * u
            status[c] = _UPPER if direction == 1 else _LOWER
            continue

        if status[c] == _UPPER:
            for i in range(m):
                beta[i] += tab[i][c] * ub[c]
        prow = tab[r]
        p = prow[c]
        pbeta = beta[r]
        for i in range(m):
            if i == r:
                continue
            row = tab[i]
            f = row[c]
            if f:
                tab[i] = [(p * x - f * y) // d for x, y in zip(row, prow)]
                beta[i] = (p * beta[i] - f * pbeta) // d
            elif p != d:
                tab[i] = [(p * x) // d for x in row]
                beta[i] = (p * beta[i]) // d
        f = z[c]
        z = [(p * x - f * y) // d for x, y in zip(z, prow)]
        d = p
        if d < 0:
            d = -d
            tab = [[-x for x in row] for row in tab]
            beta = [-x for x in beta]
            z = [-x for x in z]
        leaving = basis[r]
        basis[r] = c
        status[c] = _BASIC
        if to_upper:
            status[leaving] = _UPPER
            for i in range(m):
                beta[i] -= tab[i][leaving] * ub[leaving]
        else:
            status[leaving] = _LOWER

    if not solution:
        return all(beta[i] == 0 for i, var in enumerate(basis) if var >= nvar)
    value = [Fraction(0)] * ncol
    for j in range(ncol):
        if status[j] == _UPPER:
            value[j] = Fraction(ub[j])
    for i, var in enumerate(basis):
        value[var] = Fraction(beta[i], d)
    if any(value[j] != 0 for j in range(nvar, ncol)):
        return None
    return value[:nvar]
