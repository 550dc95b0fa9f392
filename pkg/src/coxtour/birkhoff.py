"""Signed permutations, their vertex tournaments, and two constructive routes
from a feasible score sequence on ``K_Φ`` to a tournament realizing it.

* Birkhoff route: write ``x = A rho`` with ``|A|`` doubly sub-stochastic, pad
  ``|A|`` to a doubly stochastic matrix and peel off perfect matchings.  Each
  matching is a signed permutation; padding cells carry no sign, so a matching
  that uses them is emitted twice with those cells signed ``+`` and ``-`` at
  half weight each, and their contributions cancel.
* Measure route (type C): every player draws a random signed "rank" from a
  measure ``nu_i`` on ``{±1, …, ±n}`` and games are decided by comparing draws.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .errors import InfeasibleError, UnsupportedTypeError
from .majorize import is_doubly_substochastic, mat_vec, transfer_factors
from .rational import to_vector
from .roots import RootType, require_bcd, rho_complete
from .score import Tournament, complete_violation
from .sgraph import LOOP, NEG, POS, complete_graph

ZERO, ONE, HALF_Q = Fraction(0), Fraction(1), Fraction(1, 2)


@dataclass(frozen=True)
class SignedPermutation:
    """``images[i - 1] = φ(i)``; ``φ(-i) = -φ(i)`` is implied."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if sorted(abs(v) for v in images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a signed permutation of [{n}]")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def matrix(self) -> list[list[int]]:
        """``A_φ``: row ``i`` has ``sign φ(i)`` in column ``|φ(i)|``."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.images):
            out[i][abs(v) - 1] = 1 if v > 0 else -1
        return out

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.images)) + "]"

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))


def all_signed_permutations(n: int) -> Iterable[SignedPermutation]:
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


@dataclass(frozen=True)
class SignedDecomposition:
    """Convex combination ``sum_k weight_k * A_{φ_k}``; ``rounds`` counts matchings used."""

    terms: tuple  # ((Fraction weight, SignedPermutation), ...)
    rounds: int = 0

    def __post_init__(self):
        if any(w <= 0 or w > 1 for w, _ in self.terms):
            raise ValueError("weights must lie in (0, 1]")
        if sum((w for w, _ in self.terms), ZERO) != 1:
            raise ValueError("weights must sum to 1")

    def matrix(self) -> list[list[Fraction]]:
        n = self.terms[0][1].n
        acc = [[ZERO] * n for _ in range(n)]
        for w, phi in self.terms:
            for i, row in enumerate(phi.matrix()):
                for j, a in enumerate(row):
                    if a:
                        acc[i][j] += w * a
        return acc

    def __str__(self) -> str:
        return "\n".join(f"{phi} @ {w}" for w, phi in self.terms)


def vertex_tournament(phi: SignedPermutation, t: RootType) -> Tournament:
    """The deterministic tournament ``T_φ`` on ``K_Φ``.

    ``i`` beats ``j`` iff ``φ(i) > φ(j)``; the pair ``{i, j}`` wins its
    cooperative game iff ``φ(i) + φ(j) > 0``; ``i`` wins alone iff ``φ(i) > 0``.
    """
    require_bcd(t)
    if phi.n != t.n:
        raise ValueError(f"permutation of rank {phi.n} used with {t}")
    g = complete_graph(t)
    probs = {}
    for e in g.edges:
        if e.kind == NEG:
            probs[e] = ONE if phi(e.i) > phi(e.j) else ZERO
        elif e.kind == POS:
            probs[e] = ONE if phi(e.i) + phi(e.j) > 0 else ZERO
        else:
            probs[e] = ONE if phi(e.i) > 0 else ZERO
    return Tournament(g, probs)


def _require_feasible(t: RootType, x: Sequence[Fraction]) -> None:
    if len(x) != t.n:
        raise ValueError(f"expected {t.n} scores, got {len(x)}")
    bad = complete_violation(t, x)
    if bad:
        k, lhs, rhs = bad
        raise InfeasibleError(
            f"not a mean score sequence on K_{t.kind}{t.n}: the {k} largest |x_i| sum to {lhs} > {rhs}"
        )


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def signed_transfer(x: Sequence, t: RootType) -> list[list[Fraction]]:
    """``A`` with ``A rho = x`` and ``|A|`` doubly sub-stochastic."""
    require_bcd(t)
    x = to_vector(x)
    _require_feasible(t, x)
    s, _, _ = transfer_factors([abs(v) for v in x], rho_complete(t))
    return [[_sign(x[i]) * a for a in s[i]] for i in range(t.n)]


def _deficits(b):
    n = len(b)
    rows = [1 - sum(row, ZERO) for row in b]
    cols = [1 - sum((b[i][j] for i in range(n)), ZERO) for j in range(n)]
    return rows, cols


def pad_to_doubly_stochastic(b: Sequence[Sequence]) -> list[list[Fraction]]:
    """Greedy ``E >= 0`` with ``b + E`` doubly stochastic.

    Fills the first row with a deficit against the first column with a
    deficit, by the smaller of the two; each addition clears a row or a column.
    """
    b = [[Fraction(a) for a in row] for row in b]
    if not is_doubly_substochastic(b):
        raise ValueError("padding needs a doubly sub-stochastic matrix")
    n = len(b)
    rows, cols = _deficits(b)
    e = [[ZERO] * n for _ in range(n)]
    i = j = 0
    while i < n and j < n:
        if rows[i] == 0:
            i += 1
            continue
        if cols[j] == 0:
            j += 1
            continue
        m = min(rows[i], cols[j])
        e[i][j] += m
        rows[i] -= m
        cols[j] -= m
    return e


def _perfect_matching(n: int, allowed) -> list[int] | None:
    """Kuhn's augmenting paths; ``allowed(i, j)`` tells whether cell ``(i, j)`` is usable.

    Returns ``match[i] = j`` or ``None``.
    """
    col_owner = [-1] * n

    def augment(i, seen):
        for j in range(n):
            if allowed(i, j) and not seen[j]:
                seen[j] = True
                if col_owner[j] < 0 or augment(col_owner[j], seen):
                    col_owner[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    match = [0] * n
    for j, i in enumerate(col_owner):
        match[i] = j
    return match


def birkhoff_decompose(x: Sequence, t: RootType) -> SignedDecomposition:
    """Convex combination of signed permutations ``φ_k`` with ``sum λ_k A_{φ_k} rho = x``."""
    require_bcd(t)
    x = to_vector(x)
    a = signed_transfer(x, t)
    n = t.n
    signed = [[abs(v) for v in row] for row in a]
    neutral = pad_to_doubly_stochastic(signed)
    sign = [_sign(v) for v in x]

    terms = []
    rounds = 0
    remaining = ONE
    while remaining:
        match = _perfect_matching(n, lambda i, j: signed[i][j] > 0 or neutral[i][j] > 0)
        if match is None:  # Hall's condition holds for a positive multiple of a doubly stochastic matrix
            raise AssertionError("no perfect matching in the support")
        rounds += 1
        use_signed = [signed[i][match[i]] > 0 for i in range(n)]
        lam = min(
            signed[i][match[i]] if use_signed[i] else neutral[i][match[i]] for i in range(n)
        )
        for i in range(n):
            cell = signed if use_signed[i] else neutral
            cell[i][match[i]] -= lam
        remaining -= lam
        if all(use_signed):
            images = tuple(sign[i] * (match[i] + 1) for i in range(n))
            terms.append((lam, SignedPermutation(images)))
        else:
            for flip in (1, -1):
                images = tuple(
                    (sign[i] if use_signed[i] else flip) * (match[i] + 1) for i in range(n)
                )
                terms.append((lam / 2, SignedPermutation(images)))
    return SignedDecomposition(tuple(terms), rounds)


def mixture_tournament(d: SignedDecomposition, t: RootType) -> Tournament:
    """Edge-wise convex combination of the vertex tournaments of ``d``."""
    g = complete_graph(t)
    acc = {e: ZERO for e in g.edges}
    for w, phi in d.terms:
        for e, p in vertex_tournament(phi, t).probs.items():
            if p:
                acc[e] += w
    return Tournament(g, acc)


@dataclass(frozen=True)
class FinitelySupportedMeasure:
    """Masses on the signed ranks ``{±1, …, ±n}``; zero masses are dropped."""

    mass: Mapping
    probability: bool = False

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.mass).items():
            k, v = int(k), Fraction(v)
            if k == 0:
                raise ValueError("atoms live on nonzero integers")
            if v < 0:
                raise ValueError(f"negative mass {v} at {k}")
            if v:
                clean[k] = clean.get(k, ZERO) + v
        total = sum(clean.values(), ZERO)
        if total > 1 or (self.probability and total != 1):
            raise ValueError(f"total mass {total} is not {'1' if self.probability else '<= 1'}")
        object.__setattr__(self, "mass", dict(sorted(clean.items())))

    @property
    def total(self) -> Fraction:
        return sum(self.mass.values(), ZERO)

    def __getitem__(self, k: int) -> Fraction:
        return self.mass.get(k, ZERO)


def _as_probability(nu: FinitelySupportedMeasure) -> FinitelySupportedMeasure:
    if nu.total != 1:
        raise ValueError(f"expected a probability measure, total mass is {nu.total}")
    return nu


def psi_pair(nu1: FinitelySupportedMeasure, nu2: FinitelySupportedMeasure, sign) -> Fraction:
    """``(P(X ± Y > 0) - P(X ± Y < 0)) / 2`` for independent ``X ~ nu1``, ``Y ~ nu2``."""
    s = {"+": 1, "-": -1, 1: 1, -1: -1}[sign]
    _as_probability(nu1)
    _as_probability(nu2)
    acc = ZERO
    for a, pa in nu1.mass.items():
        for b, pb in nu2.mass.items():
            acc += pa * pb * _sign(Fraction(a + s * b))
    return acc / 2


def psi_solo(nu: FinitelySupportedMeasure) -> Fraction:
    """``P(X > 0) - P(X < 0)``."""
    _as_probability(nu)
    return sum((p * _sign(Fraction(a)) for a, p in nu.mass.items()), ZERO)


def strassen_measures(x: Sequence, t: RootType) -> list[FinitelySupportedMeasure]:
    """``nu_i(±j) = E_ij / 2 + S_ij [±x_i > 0]`` with ``E = D - S``.

    ``D`` is the doubly stochastic factor behind ``S = diag(|x| / u) D``, so the
    rows of ``E`` are proportional to those of ``S``.  This proportional
    padding is what makes the score identity hold; an arbitrary completion of
    ``S`` does not (see the tests).
    """
    if t.kind != "C":
        raise UnsupportedTypeError(f"the measure construction is implemented for type C, not {t.kind}")
    x = to_vector(x)
    _require_feasible(t, x)
    s, d, _ = transfer_factors([abs(v) for v in x], rho_complete(t))
    return measures_from(x, s, [[d[i][j] - s[i][j] for j in range(t.n)] for i in range(t.n)])


def measures_from(x: Sequence[Fraction], s, e) -> list[FinitelySupportedMeasure]:
    """Build ``nu_i`` from an explicit transfer ``s`` and padding ``e``."""
    n = len(x)
    out = []
    for i in range(n):
        mass = {}
        for j in range(n):
            half = e[i][j] / 2
            mass[j + 1] = half + (s[i][j] if x[i] > 0 else ZERO)
            mass[-(j + 1)] = half + (s[i][j] if x[i] < 0 else ZERO)
        out.append(FinitelySupportedMeasure(mass, probability=True))
    return out


def tournament_from_measures(nus: Sequence[FinitelySupportedMeasure], t: RootType) -> Tournament:
    g = complete_graph(t)
    probs = {}
    for e in g.edges:
        if e.kind == NEG:
            probs[e] = psi_pair(nus[e.i - 1], nus[e.j - 1], "-") + HALF_Q
        elif e.kind == POS:
            probs[e] = psi_pair(nus[e.i - 1], nus[e.j - 1], "+") + HALF_Q
        elif e.kind == LOOP:
            probs[e] = (psi_solo(nus[e.i - 1]) + 1) / 2
        else:  # pragma: no cover - complete C graphs have no half-edges
            raise UnsupportedTypeError("half-edges do not occur in type C")
    return Tournament(g, probs)


def strassen_construct(x: Sequence, t: RootType) -> Tournament:
    """A type C tournament with mean score ``x`` built from the measures ``nu_i``."""
    return tournament_from_measures(strassen_measures(x, t), t)


def check_signed_transfer(a, x, t: RootType) -> bool:
    """``A rho == x`` and ``|A|`` doubly sub-stochastic."""
    return tuple(mat_vec(a, rho_complete(t))) == tuple(to_vector(x)) and is_doubly_substochastic(
        [[abs(v) for v in row] for row in a]
    )


__all__ = [
    "SignedPermutation",
    "SignedDecomposition",
    "FinitelySupportedMeasure",
    "all_signed_permutations",
    "vertex_tournament",
    "signed_transfer",
    "pad_to_doubly_stochastic",
    "birkhoff_decompose",
    "mixture_tournament",
    "psi_pair",
    "psi_solo",
    "strassen_measures",
    "measures_from",
    "tournament_from_measures",
    "strassen_construct",
    "check_signed_transfer",
]
