"""Bradley-Terry tournaments on ``K_Φ`` and fitting strengths to a score sequence.

Player ``i`` has strength ``lam_i``; ``i`` beats ``j`` with probability
``sigma(lam_i - lam_j)``, the pair wins together with ``sigma(lam_i + lam_j)``
and a solitaire game is won with ``sigma(lam_i)``.  Everything here is float64.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import BoundaryError, ConvergenceError
from .majorize import strict_weak_submajorizes
from .rational import to_vector
from .roots import RootType, require_bcd, rho_complete


def sigma(u):
    """Logistic function, evaluated without overflow."""
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    pos = u >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-u[pos]))
    eu = np.exp(u[~pos])
    out[~pos] = eu / (1.0 + eu)
    return out


def _solo_weight(t: RootType) -> float:
    return {"B": 1.0, "C": 2.0, "D": 0.0}[t.kind]


def bt_forward(lam: Sequence[float], t: RootType) -> np.ndarray:
    """Mean score sequence of the Bradley-Terry tournament with strengths ``lam``."""
    require_bcd(t)
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (t.n,):
        raise ValueError(f"expected {t.n} strengths, got shape {lam.shape}")
    diff = sigma(lam[:, None] - lam[None, :]) - 0.5
    summ = sigma(lam[:, None] + lam[None, :]) - 0.5
    np.fill_diagonal(diff, 0.0)
    np.fill_diagonal(summ, 0.0)
    x = diff.sum(axis=1) + summ.sum(axis=1)
    return x + _solo_weight(t) * (sigma(lam) - 0.5)


def bt_jacobian(lam: Sequence[float], t: RootType) -> np.ndarray:
    """``d x_i / d lam_j``; symmetric, positive diagonal, diagonally dominant."""
    require_bcd(t)
    lam = np.asarray(lam, dtype=float)
    sd = sigma(lam[:, None] - lam[None, :])
    ss = sigma(lam[:, None] + lam[None, :])
    dd = sd * (1 - sd)
    ds = ss * (1 - ss)
    np.fill_diagonal(dd, 0.0)
    np.fill_diagonal(ds, 0.0)
    jac = ds - dd
    sl = sigma(lam)
    diag = dd.sum(axis=1) + ds.sum(axis=1) + _solo_weight(t) * sl * (1 - sl)
    jac[np.diag_indices_from(jac)] = diag
    return jac


def _check_interior(x, t: RootType) -> None:
    exact = to_vector(x) if not isinstance(x, np.ndarray) else None
    if exact is not None:
        absx = [abs(v) for v in exact]
        rho = rho_complete(t)
        if t.kind == "D" and t.n == 1:
            # the only player has no games; 0 is the one attainable score
            if absx[0] != 0:
                raise BoundaryError("D_1 admits only the score 0")
            return
        if not strict_weak_submajorizes(absx, rho):
            raise BoundaryError(
                "Bradley-Terry scores fill the open interior only; |x| must be strictly "
                "weakly sub-majorized by rho"
            )


def bt_fit(
    x: Sequence, t: RootType, tol: float = 1e-9, max_iter: int = 200
) -> np.ndarray:
    """Strengths ``lam`` with ``max |bt_forward(lam) - x| <= tol``.

    Damped Newton from ``lam = 0``: the step is halved until the residual
    decreases.  ``x`` may be exact (strings, Fractions) or floats; exact input
    is checked against the boundary first.
    """
    require_bcd(t)
    if len(x) != t.n:
        raise ValueError(f"expected {t.n} scores, got {len(x)}")
    if all(not isinstance(v, float) for v in x):
        _check_interior(x, t)
        target = np.array([float(v) for v in to_vector(x)])
    else:
        target = np.asarray(x, dtype=float)
    lam = np.zeros(t.n)
    res = bt_forward(lam, t) - target
    norm = np.max(np.abs(res)) if t.n else 0.0
    for _ in range(max_iter):
        if norm <= tol:
            return lam
        jac = bt_jacobian(lam, t)
        try:
            step = np.linalg.solve(jac, res)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(f"singular Jacobian at residual {norm:.3g}", norm) from exc
        scale = 1.0
        while True:
            cand = lam - scale * step
            cres = bt_forward(cand, t) - target
            cnorm = np.max(np.abs(cres))
            if cnorm < norm or scale < 1e-12:
                break
            scale /= 2
        if cnorm >= norm:
            raise ConvergenceError(f"no descent from residual {norm:.3g}", norm)
        lam, res, norm = cand, cres, cnorm
    if norm <= tol:
        return lam
    raise ConvergenceError(f"no convergence in {max_iter} iterations; residual {norm:.3g}", norm)
