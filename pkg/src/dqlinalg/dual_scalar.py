"""Dual numbers ``st + in*eps`` with ``eps**2 == 0`` and their total order."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from enum import IntEnum
from functools import total_ordering

from .errors import NegativeArgument, NotRepresentable, Singular


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
@dataclass(frozen=True)
class DualNumber:
    """A dual number.

    Comparison operators follow the lexicographic total order on
    ``(st, in_)``: standard parts decide, infinitesimal parts break ties.
    """

    st: float
    in_: float = 0.0

    def __post_init__(self):
        st, in_ = float(self.st), float(self.in_)
        if not (math.isfinite(st) and math.isfinite(in_)):
            raise ValueError(f"non-finite dual number ({st}, {in_})")
        object.__setattr__(self, "st", st)
        object.__setattr__(self, "in_", in_)

    @classmethod
    def coerce(cls, value) -> "DualNumber":
        if isinstance(value, DualNumber):
            return value
        if isinstance(value, tuple):
            return cls(*value)
        return cls(value, 0.0)

    def __add__(self, other):
        if not _is_operand(other):
            return NotImplemented
        other = DualNumber.coerce(other)
        return DualNumber(self.st + other.st, self.in_ + other.in_)

    __radd__ = __add__

    def __neg__(self):
        return DualNumber(-self.st, -self.in_)

    def __sub__(self, other):
        if not _is_operand(other):
            return NotImplemented
        other = DualNumber.coerce(other)
        return DualNumber(self.st - other.st, self.in_ - other.in_)

    def __rsub__(self, other):
        if not _is_operand(other):
            return NotImplemented
        return DualNumber.coerce(other) - self

    def __mul__(self, other):
        if not _is_operand(other):
            return NotImplemented
        other = DualNumber.coerce(other)
        return DualNumber(self.st * other.st, self.st * other.in_ + self.in_ * other.st)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_operand(other):
            return NotImplemented
        return self * inverse(DualNumber.coerce(other))

    def __abs__(self):
        return dual_abs(self)

    def __lt__(self, other):
        return compare(self, DualNumber.coerce(other)) is Ordering.LESS

    def __eq__(self, other):
        try:
            other = DualNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.st == other.st and self.in_ == other.in_

    def as_tuple(self) -> tuple[float, float]:
        return (self.st, self.in_)

    def is_appreciable(self) -> bool:
        return self.st != 0.0

    def __repr__(self):
        return f"DualNumber({self.st!r}, {self.in_!r})"

    def __str__(self):
        return f"({_fmt(self.st)}, {_fmt(self.in_)})"


def _is_operand(value) -> bool:
    return isinstance(value, (DualNumber, numbers.Real, tuple))


ZERO = DualNumber(0.0, 0.0)
ONE = DualNumber(1.0, 0.0)


def _fmt(x: float) -> str:
    s = format(x, ".12g")
    return "0" if s == "-0" else s


def add(p: DualNumber, q: DualNumber) -> DualNumber:
    return p + q


def mul(p: DualNumber, q: DualNumber) -> DualNumber:
    return p * q


def compare(p: DualNumber, q: DualNumber) -> Ordering:
    """Exact lexicographic comparison of ``p`` against ``q``."""
    if p.st != q.st:
        return Ordering.LESS if p.st < q.st else Ordering.GREATER
    if p.in_ != q.in_:
        return Ordering.LESS if p.in_ < q.in_ else Ordering.GREATER
    return Ordering.EQUAL


def _sgn(x: float) -> float:
    return 1.0 if x > 0 else (-1.0 if x < 0 else 0.0)


def dual_abs(q: DualNumber) -> DualNumber:
    if q.st != 0.0:
        return DualNumber(abs(q.st), _sgn(q.st) * q.in_)
    return DualNumber(0.0, abs(q.in_))


def sqrt(q: DualNumber) -> DualNumber:
    """Square root of a nonnegative dual number.

    Raises NegativeArgument for ``q < 0`` and NotRepresentable for a
    nonzero infinitesimal, which has no dual square root.
    """
    if compare(q, ZERO) is Ordering.LESS:
        raise NegativeArgument(f"square root of negative dual number {q}")
    if q.st == 0.0:
        if q.in_ == 0.0:
            return ZERO
        raise NotRepresentable(f"nonzero infinitesimal {q} has no dual square root")
    root = math.sqrt(q.st)
    return DualNumber(root, q.in_ / (2.0 * root))


def inverse(q: DualNumber) -> DualNumber:
    if q.st == 0.0:
        raise Singular(f"infinitesimal dual number {q} is not invertible")
    inv = 1.0 / q.st
    return DualNumber(inv, -inv * q.in_ * inv)


def is_appreciable(q: DualNumber) -> bool:
    return q.st != 0.0


def dual_sum(values) -> DualNumber:
    values = list(values)
    st = math.fsum(v.st for v in values)
    in_ = math.fsum(v.in_ for v in values)
    return DualNumber(st, in_)


def sort_desc(values) -> list[DualNumber]:
    """Sort dual numbers into nonascending total order."""
    return sorted(values, key=lambda v: (v.st, v.in_), reverse=True)
