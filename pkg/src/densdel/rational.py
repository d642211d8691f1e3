"""Exact rational arithmetic helpers and costs that may be infinite.

All densities, thresholds and LP values in this library are
``fractions.Fraction`` values; nothing numeric is ever a float.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import ParseError


def parse_frac(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact fraction."""
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def frac_str(x: Fraction) -> str:
    """Render a fraction as "p/q", always with an explicit denominator."""
    return f"{x.numerator}/{x.denominator}"


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the closed interval [lo, hi].

    Standard Stern-Brocot / continued-fraction walk.  Requires lo <= hi.
    """
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return lo
    fl = lo.numerator // lo.denominator  # floor(lo)
    if lo.denominator == 1:  # lo is an integer
        return lo
    if Fraction(fl + 1) <= hi:  # an integer lies inside
        return Fraction(fl + 1)
    # recurse on the fractional parts, inverted
    inner = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


@functools.total_ordering
class Cost:
    """A non-negative rational cost, or infinity.

    Infinity absorbs addition and compares above every finite cost.
    """

    __slots__ = ("value",)

    def __init__(self, value: Fraction | int | None):
        if value is None:
            self.value = None
        else:
            v = Fraction(value)
            if v < 0:
                raise ValueError("costs must be non-negative")
            self.value = v

    @classmethod
    def infinite(cls) -> "Cost":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "Cost":
        if text.strip().lower() == "inf":
            return cls.infinite()
        return cls(parse_frac(text))

    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "Cost") -> "Cost":
        if self.is_infinite() or other.is_infinite():
            return Cost.infinite()
        return Cost(self.value + other.value)

    def __radd__(self, other):
        if other == 0:  # allow sum()
            return self
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cost):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other: "Cost") -> bool:
        if self.is_infinite():
            return False
        if other.is_infinite():
            return True
        return self.value < other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite() else frac_str(self.value)

    def __repr__(self) -> str:
        return f"Cost({self})"


COST_ZERO = Cost(0)
COST_ONE = Cost(1)
COST_INF = Cost.infinite()


def total_cost(costs, vertices) -> Cost:
    """Sum of costs over a vertex collection (Cost.infinite absorbs)."""
    acc = Cost(0)
    for v in vertices:
        acc = acc + costs[v]
    return acc
