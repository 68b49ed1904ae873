"""Elementary maps between hypercubes with exact rational coordinates.

Points of ``[0, 1]^n`` are tuples of :class:`fractions.Fraction`.  Indices
are 1-based as in the usual cubical notation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

CubePoint = tuple


def cube_point(coords: Iterable) -> CubePoint:
    """Coerce coordinates to Fractions and check they lie in [0, 1]."""
    point = tuple(Fraction(c) for c in coords)
    for c in point:
        if not ZERO <= c <= ONE:
            raise ValueError(f"coordinate {c} outside [0, 1]")
    return point


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """``"p/q"`` in lowest terms, or a plain integer string."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check(i: int, lo: int, hi: int, name: str) -> None:
    if not lo <= i <= hi:
        raise IndexError(f"{name} index {i} outside [{lo}, {hi}]")


def apply_face(sign: str, i: int, x: Sequence) -> CubePoint:
    """Positive or negative face: insert 1 (``'+'``) or 0 (``'-'``) at position i."""
    if sign not in ("+", "-"):
        raise ValueError(f"face sign must be '+' or '-', got {sign!r}")
    _check(i, 1, len(x) + 1, "face")
    value = ONE if sign == "+" else ZERO
    return tuple(x[: i - 1]) + (value,) + tuple(x[i - 1:])


def apply_degeneracy(i: int, x: Sequence) -> CubePoint:
    """Drop coordinate i."""
    _check(i, 1, len(x), "degeneracy")
    return tuple(x[: i - 1]) + tuple(x[i:])


def apply_connection(i: int, x: Sequence) -> CubePoint:
    """Replace coordinates i and i+1 by their maximum."""
    _check(i, 1, len(x) - 1, "connection")
    return tuple(x[: i - 1]) + (max(x[i - 1], x[i]),) + tuple(x[i + 1:])


def apply_shuffle(i: int, x: Sequence, y: Sequence) -> CubePoint:
    """Insert the block y in front of the i-th coordinate of x."""
    _check(i, 1, len(x) + 1, "shuffle")
    return tuple(x[: i - 1]) + tuple(y) + tuple(x[i - 1:])

