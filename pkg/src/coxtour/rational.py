"""Exact rational parsing and formatting.

Every core algorithm works on :class:`fractions.Fraction`.  Decimal strings such
as ``"-5.2"`` parse to the exact rational ``-26/5``; binary floats are never
used on the way in.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def parse_rational(value) -> Fraction:
    """Parse ``"3/4"``, ``"-5.2"``, ``"1e-3"``, ints or Fractions exactly.

    Floats are rejected: a binary float has already lost the decimal the user
    typed.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing binary float {value!r}; pass a string")
    text = str(value).strip().replace("−", "-")
    if not text:
        raise ValueError("empty number")
    return Fraction(text)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Parse a vector from CSV text: one number per line, or comma separated.

    Surrounding parentheses/brackets are ignored, so ``"(0, 5/2)"`` works.
    """
    cleaned = text.strip().strip("()[]")
    parts = [p.strip() for line in cleaned.splitlines() for p in line.split(",")]
    return tuple(parse_rational(p) for p in parts if p and not p.startswith("#"))


def to_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def fmt(q: Fraction) -> str:
    return str(q)


def fmt_vector(v: Sequence[Fraction]) -> list[str]:
    return [str(q) for q in v]


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for q in values:
        d = math.lcm(d, q.denominator)
    return d
