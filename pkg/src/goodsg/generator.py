"""Test-instance sources: exhaustive enumeration and seeded random generation."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Dict, Iterator, Optional, Sequence

import numpy as np

from .algebra import translate
from .canonical import std_canonical
from .lattice import Point, point
from .truncated import GoodSemigroup, GoodSemigroupError, TruncatedSet, g2_failures, validate

# exhaustive search refuses boxes larger than these conductors
ENUM_LIMITS = {1: (24,), 2: (5, 5)}


class GenerationError(GoodSemigroupError):
    pass


class EnumerationTooLarge(GoodSemigroupError, ValueError):
    pass


@dataclass(frozen=True)
class GenConfig:
    dim: int
    cap: Point
    seed: int = 0
    max_rounds: int = 1000
    max_retries: int = 200
    axis_prob: float = 0.12  # chance that a seed point may touch a coordinate hyperplane
    canonical_prob: float = 0.2  # chance that a random ideal is a translate of K(S)

    def __post_init__(self):
        cap = point(self.cap)
        object.__setattr__(self, "cap", cap)
        if len(cap) != self.dim:
            raise ValueError(f"cap {cap} does not have dimension {self.dim}")
        if any(c < 1 for c in cap):
            raise ValueError("cap must be >= 1 componentwise")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")


class _BoxClosure:
    """Closure under truncated addition and meet inside the box [0, cap], on bitmasks."""

    def __init__(self, cap: Point):
        self.cap = cap
        self.points = list(cartesian(*(range(c + 1) for c in cap)))
        self.index = {p: k for k, p in enumerate(self.points)}
        n = len(self.points)
        idx = self.index
        self.add = [[idx[tuple(min(a + b, c) for a, b, c in zip(p, q, cap))] for q in self.points] for p in self.points]
        self.meet = [[idx[tuple(min(a, b) for a, b in zip(p, q))] for q in self.points] for p in self.points]
        self.full = (1 << n) - 1

    def close(self, mask: int, new: Sequence[int]) -> int:
        members = [k for k in range(len(self.points)) if mask >> k & 1]
        work = [k for k in new if not mask >> k & 1]
        add, meet = self.add, self.meet
        while work:
            x = work.pop()
            if mask >> x & 1:
                continue
            mask |= 1 << x
            members.append(x)
            ax, mx = add[x], meet[x]
            for y in members:
                s = ax[y]
                if not mask >> s & 1:
                    work.append(s)
                m = mx[y]
                if not mask >> m & 1:
                    work.append(m)
        return mask

    def to_set(self, mask: int) -> TruncatedSet:
        grid = np.zeros(tuple(c + 1 for c in self.cap), dtype=bool)
        for k, p in enumerate(self.points):
            if mask >> k & 1:
                grid[p] = True
        return TruncatedSet((0,) * len(self.cap), self.cap, grid)


def _closed_sets(box: _BoxClosure) -> Iterator[int]:
    """Every (+, meet)-closed subset of the box containing 0 and cap, once each.

    Depth-first over the box points in lexicographic order; including a point
    adds its closure, and a branch dies as soon as the closure reaches a point
    excluded earlier.
    """
    n = len(box.points)
    start = box.close(0, [0, n - 1])

    def dfs(k: int, mask: int, excluded: int):
        while k < n and mask >> k & 1:
            k += 1
        if k == n:
            yield mask
            return
        yield from dfs(k + 1, mask, excluded | (1 << k))
        grown = box.close(mask, [k])
        if not grown & excluded:
            yield from dfs(k + 1, grown, excluded)

    yield from dfs(0, start, 0)


def enumerate_good(h: int, cap: Sequence[int]) -> Iterator[GoodSemigroup]:
    """All good semigroups of N^h with conductor <= cap, N^h included, in a fixed order."""
    cap = point(cap)
    if len(cap) != h:
        raise ValueError(f"cap {cap} does not have dimension {h}")
    if h not in ENUM_LIMITS:
        raise EnumerationTooLarge(f"exhaustive enumeration supports h in {sorted(ENUM_LIMITS)}")
    limit = ENUM_LIMITS[h]
    if any(c > l for c, l in zip(cap, limit)) or any(c < 0 for c in cap):
        raise EnumerationTooLarge(f"cap {cap} exceeds the exhaustive bound {limit}")
    box = _BoxClosure(cap)
    for mask in _closed_sets(box):
        T = box.to_set(mask)
        if g2_failures(T, pad=1, limit=1):
            continue
        yield GoodSemigroup(T)


def _repair(box: _BoxClosure, mask: int, rounds: int) -> Optional[int]:
    """Insert the least admissible delta for (G2) failures until none remain."""
    for _ in range(rounds):
        fails = g2_failures(box.to_set(mask), pad=1, limit=1)
        if not fails:
            return mask
        f = fails[0]
        delta = list(min(m, c) for m, c in zip(f.meet, box.cap))
        delta[f.axis] = f.meet[f.axis] + 1
        mask = box.close(mask, [box.index[tuple(delta)]])
    return None


_boxes: Dict[Point, _BoxClosure] = {}


def _box(cap: Point) -> _BoxClosure:
    if cap not in _boxes:
        _boxes[cap] = _BoxClosure(cap)
    return _boxes[cap]


def random_good(cfg: GenConfig) -> GoodSemigroup:
    """A seeded random good semigroup with conductor <= cfg.cap, never N^h."""
    rng = random.Random(cfg.seed)
    box = _box(cfg.cap)
    for _ in range(cfg.max_retries):
        seeds = [0, len(box.points) - 1]
        for _ in range(rng.randint(1, 3)):
            lo = 0 if rng.random() < cfg.axis_prob else 1
            p = tuple(rng.randint(lo, c) for c in cfg.cap)
            seeds.append(box.index[p])
        mask = _repair(box, box.close(0, seeds), cfg.max_rounds)
        if mask is None or mask == box.full:
            continue
        S = GoodSemigroup(box.to_set(mask))
        if not S.is_ambient:
            return S
    raise GenerationError(f"no good semigroup after {cfg.max_retries} attempts (seed {cfg.seed})")


def _ideal_closure(S: TruncatedSet, members: set, lo: Point, hi: Point) -> set:
    """Close a window set under meets and translation by S, truncating at hi."""
    shifts = S.members((0,) * S.dim, tuple(b - a for a, b in zip(lo, hi)))
    work = list(members)
    members = set()
    while work:
        x = work.pop()
        if x in members:
            continue
        members.add(x)
        for s in shifts:
            y = tuple(min(a + b, c) for a, b, c in zip(x, s, hi))
            if y not in members:
                work.append(y)
        for z in list(members):
            m = tuple(min(a, b) for a, b in zip(x, z))
            if m not in members:
                work.append(m)
    return members


def random_good_ideal(S: GoodSemigroup, cfg: GenConfig, spread: int = 3) -> TruncatedSet:
    """A seeded random good relative ideal of S containing a translate of S."""
    rng = random.Random(cfg.seed)
    h = S.dim
    for _ in range(cfg.max_retries):
        xs = [tuple(rng.randint(-spread + 1, spread) for _ in range(h)) for _ in range(rng.randint(1, 3))]
        if rng.random() < cfg.canonical_prob:
            return translate(std_canonical(S), xs[0])
        lo = tuple(min(x[k] for x in xs) for k in range(h))
        hi = tuple(max(x[k] for x in xs) + S.conductor[k] for k in range(h))
        start = set()
        for x in xs:
            start |= set(translate(S, x).members(lo, hi))
        members = _ideal_closure(S, start, lo, hi)
        for _ in range(cfg.max_rounds):
            grid = np.zeros(tuple(b - a + 1 for a, b in zip(lo, hi)), dtype=bool)
            for p in members:
                grid[tuple(a - l for a, l in zip(p, lo))] = True
            T = TruncatedSet(lo, hi, grid)
            fails = g2_failures(T, pad=1, limit=1)
            if not fails:
                break
            f = fails[0]
            delta = [min(m, c) for m, c in zip(f.meet, hi)]
            delta[f.axis] = f.meet[f.axis] + 1
            members = _ideal_closure(S, members | {tuple(delta)}, lo, hi)
        else:
            continue
        E = T.normalize()
        if validate(E):
            continue
        return E
    raise GenerationError(f"no good ideal after {cfg.max_retries} attempts (seed {cfg.seed})")
