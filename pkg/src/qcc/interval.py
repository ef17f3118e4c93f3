from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class ValueInterval:
    """Closed integer interval ``[lo, hi]``; ``hi is None`` means unbounded above."""

    lo: int
    hi: int | None

    def __post_init__(self):
        if self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int) -> ValueInterval:
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"{self} is not exact")
        return self.lo

    def __add__(self, other: ValueInterval | int) -> ValueInterval:
        if isinstance(other, int):
            other = ValueInterval.exact(other)
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return ValueInterval(self.lo + other.lo, hi)

    __radd__ = __add__

    def shift(self, d: int) -> ValueInterval:
        return ValueInterval(self.lo + d, None if self.hi is None else self.hi + d)

    def contains(self, x: int) -> bool:
        return self.lo <= x and (self.hi is None or x <= self.hi)

    def __str__(self) -> str:
        if self.hi is None:
            return f"[{self.lo},inf)"
        tag = " exact" if self.is_exact else ""
        return f"[{self.lo},{self.hi}]{tag}"

    def to_json(self) -> list:
        return [self.lo, self.hi]

    @classmethod
    def from_json(cls, data) -> ValueInterval:
        lo, hi = data
        return cls(int(lo), None if hi is None else int(hi))


def interval_min(items: Iterable[ValueInterval]) -> ValueInterval:
    """Component-wise minimum: the set of possible minima of the unknowns."""
    items = list(items)
    if not items:
        raise ValueError("interval_min of nothing")
    lo = min(x.lo for x in items)
    his = [x.hi for x in items if x.hi is not None]
    return ValueInterval(lo, min(his) if his else None)


def interval_sum(items: Iterable[ValueInterval]) -> ValueInterval:
    total = ValueInterval.exact(0)
    for x in items:
        total = total + x
    return total
