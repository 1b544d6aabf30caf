"""Integer lattice primitives on Z^h.

Points are plain tuples of ints. Axes are 0-based throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Tuple

Point = Tuple[int, ...]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class DimensionError(ValueError):
    pass


class Order(str, Enum):
    LESS_EQUAL = "less-equal"
    GREATER_EQUAL = "greater-equal"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def point(coords: Iterable[int]) -> Point:
    p = tuple(int(c) for c in coords)
    if not p:
        raise DimensionError("points need at least one coordinate")
    return p


def _same_dim(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def check_range(p: Point) -> Point:
    """Reject coordinates that do not fit a signed 64-bit integer."""
    for c in p:
        if c < INT64_MIN or c > INT64_MAX:
            raise OverflowError(f"coordinate {c} overflows int64 in {p}")
    return p


def add(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return check_range(tuple(x + y for x, y in zip(a, b)))


def sub(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return check_range(tuple(x - y for x, y in zip(a, b)))


def neg_point(a: Point) -> Point:
    return check_range(tuple(-x for x in a))


def meet(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def cap(a: Point, bound: Point) -> Point:
    """Truncate `a` at `bound`; identical to ``meet(a, bound)``."""
    return meet(a, bound)


def leq(a: Point, b: Point) -> bool:
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def compare(a: Point, b: Point) -> Order:
    _same_dim(a, b)
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS_EQUAL
    if ge:
        return Order.GREATER_EQUAL
    return Order.INCOMPARABLE


def in_delta_i(b: Point, a: Point, i: int) -> bool:
    """True iff b agrees with a on axis i and is strictly larger on every other axis."""
    _same_dim(a, b)
    if not 0 <= i < len(a):
        raise IndexError(f"axis {i} out of range for dimension {len(a)}")
    if b[i] != a[i]:
        return False
    return all(b[j] > a[j] for j in range(len(a)) if j != i)


def in_delta(b: Point, a: Point) -> bool:
    return any(in_delta_i(b, a, i) for i in range(len(a)))


def ones(h: int) -> Point:
    return (1,) * h


def zeros(h: int) -> Point:
    return (0,) * h


@dataclass(frozen=True)
class Box:
    lo: Point
    hi: Point

    def __post_init__(self):
        _same_dim(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise ValueError(f"empty box: {self.lo} is not <= {self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(h - l + 1 for l, h in zip(self.lo, self.hi))

    def __contains__(self, p: Point) -> bool:
        return leq(self.lo, p) and leq(p, self.hi)

    def __iter__(self) -> Iterator[Point]:
        """Points of the box in lexicographic order."""
        from itertools import product

        return iter(product(*(range(l, h + 1) for l, h in zip(self.lo, self.hi))))

    def __len__(self) -> int:
        n = 1
        for s in self.shape:
            n *= s
        return n
