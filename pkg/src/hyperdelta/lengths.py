"""Exact lengths in quarter units and closed intervals of them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class QuarterLength:
    """A non-negative length stored as an integer number of quarter edges."""

    quarters: int

    def __post_init__(self) -> None:
        if not isinstance(self.quarters, int) or isinstance(self.quarters, bool):
            raise TypeError(f"quarters must be an int, got {self.quarters!r}")
        if self.quarters < 0:
            raise ValueError(f"lengths are non-negative, got {self.quarters} quarters")

    @classmethod
    def from_value(cls, value: Number) -> "QuarterLength":
        """Convert an exact value in edge units; it must be a multiple of 1/4."""
        q = Fraction(value) * 4
        if q.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/4")
        return cls(int(q))

    @classmethod
    def from_units(cls, units: int, scale: int) -> "QuarterLength":
        """Convert a length measured in 1/scale edge units."""
        return cls.from_value(Fraction(units, scale))

    @property
    def value(self) -> Fraction:
        return Fraction(self.quarters, 4)

    @property
    def halves(self) -> Fraction:
        return Fraction(self.quarters, 2)

    def __add__(self, other: "QuarterLength") -> "QuarterLength":
        if not isinstance(other, QuarterLength):
            return NotImplemented
        return QuarterLength(self.quarters + other.quarters)

    def __mul__(self, k: int) -> "QuarterLength":
        if not isinstance(k, int):
            return NotImplemented
        return QuarterLength(self.quarters * k)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.quarters / 4

    def __str__(self) -> str:
        return format_value(self.value)

    def describe(self) -> str:
        """Exact rational followed by a display-only decimal, e.g. ``7/4 (1.75)``."""
        return f"{self} ({self.quarters / 4:g})"


def format_value(value: Number) -> str:
    v = Fraction(value)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def q(value: Number) -> QuarterLength:
    """Shorthand: ``q("7/4")`` or ``q(Fraction(7, 4))`` or ``q(2)``."""
    return QuarterLength.from_value(Fraction(value))


@dataclass(frozen=True)
class ValueInterval:
    """Closed interval ``[lower, upper]`` with tags naming the cases that produced it.

    ``upper_witness_edges`` is the edge count of a class member whose delta is at
    most ``upper`` (when known); ``lower_witness_edges`` is that of a member whose
    delta is at least ``lower``.  The subdivision rules of
    :func:`hyperdelta.extremal.refine` need them.
    """

    lower: QuarterLength
    upper: QuarterLength
    provenance: Tuple[str, ...] = field(default=())
    lower_witness_edges: Optional[int] = None
    upper_witness_edges: Optional[int] = None

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def exact_value(cls, value: QuarterLength, *tags: str, **kw) -> "ValueInterval":
        return cls(value, value, tuple(tags), **kw)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __contains__(self, value: object) -> bool:
        if isinstance(value, QuarterLength):
            return self.lower <= value <= self.upper
        if isinstance(value, (int, Fraction)):
            return self.lower.value <= value <= self.upper.value
        return False

    def is_subset_of(self, other: "ValueInterval") -> bool:
        return other.lower <= self.lower and self.upper <= other.upper

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        return f"[{self.lower}, {self.upper}]"
