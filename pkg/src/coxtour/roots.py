"""Root-system metadata for the classical families A, B, C, D.

Players are numbered ``1..n`` in every public interface; vectors are ordinary
0-based Python tuples, so player ``i`` lives at index ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

from .errors import UnsupportedTypeError

KINDS = ("A", "B", "C", "D")

_DELTA = {"B": Fraction(1, 2), "C": Fraction(1), "D": Fraction(0)}


@dataclass(frozen=True, order=True)
class RootType:
    """A root system tag: ``kind`` in {A, B, C, D} and rank ``n`` (number of players)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown root system kind {self.kind!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")
        if self.kind == "A" and self.n < 2:
            raise ValueError("type A needs at least two players")

    def __str__(self) -> str:
        return f"{self.kind}_{self.n}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "RootType":
        return cls(str(data["kind"]).upper(), int(data["n"]))


def require_bcd(t: RootType) -> None:
    if t.kind not in _DELTA:
        raise UnsupportedTypeError(f"{t} is not of type B, C or D")


def delta_of(t: RootType) -> Fraction:
    """Solitaire offset: 1/2 for B, 1 for C, 0 for D."""
    require_bcd(t)
    return _DELTA[t.kind]


def rho_complete(t: RootType) -> tuple[Fraction, ...]:
    """``(0, 1, ..., n-1) + delta * (1, ..., 1)``, the score of the all-win tournament."""
    d = delta_of(t)
    return tuple(Fraction(i) + d for i in range(t.n))


@dataclass(frozen=True)
class AdmissibleSubset:
    """A subset ``S`` of ``{±1..±n}`` with no pair ``{i, -i}``.

    ``plus`` holds the ``i`` with ``i in S`` and ``minus`` the ``i`` with
    ``-i in S``.
    """

    plus: frozenset = field(default_factory=frozenset)
    minus: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))
        if self.plus & self.minus:
            raise ValueError(f"not admissible: {sorted(self.plus & self.minus)} in both signs")

    def weight(self, n: int) -> tuple[int, ...]:
        """The 0/±1 direction ``sum_{S+} e_i - sum_{S-} e_i``."""
        return tuple(1 if i in self.plus else -1 if i in self.minus else 0 for i in range(1, n + 1))


def reduce_subset(s: AdmissibleSubset) -> frozenset:
    """Forget the signs: ``S+ ∪ (-S-)`` as a subset of ``[n]``."""
    return s.plus | s.minus


def admissible_subsets(n: int, include_empty: bool = False) -> Iterator[AdmissibleSubset]:
    """All ``3**n`` admissible subsets (optionally without the empty one)."""
    for signs in product((0, 1, -1), repeat=n):
        if not include_empty and not any(signs):
            continue
        yield AdmissibleSubset(
            frozenset(i + 1 for i, s in enumerate(signs) if s == 1),
            frozenset(i + 1 for i, s in enumerate(signs) if s == -1),
        )
