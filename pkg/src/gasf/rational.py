"""Parsing and formatting of exact rationals ("p/q" strings)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import MalformedSpec


def to_fraction(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise MalformedSpec(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedSpec(f"not a rational: {x!r}") from None
    # floats are rejected on purpose: everything downstream is exact
    raise MalformedSpec(f"not a rational: {x!r}")


def fmt(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_vec(v: Iterable) -> list[str]:
    return [fmt(x) for x in v]


def parse_vec(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,-1/2,0"`` into a tuple of Fractions."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if not parts or any(p == "" for p in parts):
        raise MalformedSpec(f"bad vector: {text!r}")
    return tuple(to_fraction(p) for p in parts)


def is_int(q: Fraction) -> bool:
    return Fraction(q).denominator == 1
