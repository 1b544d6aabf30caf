"""Finite representation of truncation-stable subsets of Z^h.

A :class:`TruncatedSet` is given by a lower bound ``L``, a conductor bound ``C``
and a boolean grid over the box ``[L, C]``. A point ``a`` is a member iff
``a >= L`` and ``cap(a, C)`` is marked in the grid. Good semigroups and all
their relative ideals used in this package are stored this way.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ._grid import along, strict_suffix_any, suffix_any
from .lattice import DimensionError, Point, add, cap, check_range, ones, point, sub, zeros


class GoodSemigroupError(Exception):
    pass


class RepresentationError(GoodSemigroupError):
    pass


class NotLocalError(GoodSemigroupError):
    pass


class InternalDefect(GoodSemigroupError):
    """Two independent computations that must agree did not."""


class NotGoodError(GoodSemigroupError):
    def __init__(self, findings: Sequence["ValidationFinding"], what: str = "set"):
        self.findings = list(findings)
        first = self.findings[0].message if self.findings else "no findings"
        super().__init__(f"{what} is not good: {first}")


class TruncatedSet:
    __slots__ = ("lower", "conductor", "grid", "_small")

    def __init__(self, lower: Iterable[int], conductor: Iterable[int], grid):
        lower = check_range(point(lower))
        conductor = check_range(point(conductor))
        if len(lower) != len(conductor):
            raise DimensionError("lower and conductor differ in dimension")
        if any(l > c for l, c in zip(lower, conductor)):
            raise RepresentationError(f"lower {lower} is not <= conductor {conductor}")
        grid = np.array(grid, dtype=bool)
        shape = tuple(c - l + 1 for l, c in zip(lower, conductor))
        if grid.shape != shape:
            raise RepresentationError(f"grid shape {grid.shape} does not match window {shape}")
        if not grid[(-1,) * len(shape)]:
            raise RepresentationError("conductor element absent")
        grid.flags.writeable = False
        self.lower = lower
        self.conductor = conductor
        self.grid = grid
        self._small = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_points(cls, lower, conductor, points: Iterable[Iterable[int]]) -> "TruncatedSet":
        lower, conductor = point(lower), point(conductor)
        grid = np.zeros(tuple(c - l + 1 for l, c in zip(lower, conductor)), dtype=bool)
        for p in points:
            p = point(p)
            if len(p) != len(lower):
                raise DimensionError(f"point {p} has wrong dimension")
            if any(x < l or x > c for x, l, c in zip(p, lower, conductor)):
                raise RepresentationError(f"point {p} outside window [{lower}, {conductor}]")
            grid[tuple(x - l for x, l in zip(p, lower))] = True
        return cls(lower, conductor, grid)

    @classmethod
    def from_predicate(cls, lower, conductor, pred: Callable[[Point], bool]) -> "TruncatedSet":
        lower, conductor = point(lower), point(conductor)
        shape = tuple(c - l + 1 for l, c in zip(lower, conductor))
        grid = np.zeros(shape, dtype=bool)
        for idx in np.ndindex(*shape):
            grid[idx] = bool(pred(tuple(l + i for l, i in zip(lower, idx))))
        return cls(lower, conductor, grid)

    @classmethod
    def ambient(cls, h: int) -> "TruncatedSet":
        """N^h."""
        return cls(zeros(h), zeros(h), np.ones((1,) * h, dtype=bool))

    @classmethod
    def orthant(cls, corner: Point) -> "TruncatedSet":
        """corner + N^h."""
        return cls(corner, corner, np.ones((1,) * len(corner), dtype=bool))

    # -- basic queries ------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.lower)

    @property
    def small(self) -> Tuple[Point, ...]:
        """Members inside ``[L, C]``, lexicographically sorted."""
        if self._small is None:
            idx = np.argwhere(self.grid)
            self._small = tuple(tuple(int(v) + l for v, l in zip(row, self.lower)) for row in idx)
        return self._small

    def _check_dim(self, p: Sequence[int]) -> None:
        if len(p) != self.dim:
            raise DimensionError(f"dimension mismatch: {len(p)} vs {self.dim}")

    def contains(self, a: Iterable[int]) -> bool:
        a = tuple(a)
        self._check_dim(a)
        if any(x < l for x, l in zip(a, self.lower)):
            return False
        return bool(self.grid[tuple(x - l for x, l in zip(cap(a, self.conductor), self.lower))])

    __contains__ = contains

    def window(self, lo: Sequence[int], hi: Sequence[int]) -> np.ndarray:
        """Membership array for the box ``[lo, hi]``."""
        self._check_dim(lo)
        self._check_dim(hi)
        h = self.dim
        idx, ok = [], []
        for k in range(h):
            xs = np.arange(lo[k], hi[k] + 1)
            ok.append(xs >= self.lower[k])
            idx.append(np.clip(xs - self.lower[k], 0, self.conductor[k] - self.lower[k]))
        out = self.grid[np.ix_(*idx)]
        for k in range(h):
            out = out & along(ok[k], k, h)
        return out

    def members(self, lo: Sequence[int], hi: Sequence[int]) -> List[Point]:
        w = self.window(lo, hi)
        return [tuple(int(v) + l for v, l in zip(row, lo)) for row in np.argwhere(w)]

    def member_min(self) -> Point:
        """Componentwise minimum of the member set."""
        h = self.dim
        out = []
        for k in range(h):
            other = tuple(j for j in range(h) if j != k)
            prof = self.grid.any(axis=other) if other else self.grid
            out.append(self.lower[k] + int(np.argmax(prof)))
        return tuple(out)

    # -- normal form --------------------------------------------------

    def normalize(self) -> "TruncatedSet":
        """Smallest window: lower = member minimum, conductor = least truncation bound."""
        h = self.dim
        g = self.grid
        lo_idx = [m - l for m, l in zip(self.member_min(), self.lower)]
        hi_idx = []
        for k in range(h):
            n = g.shape[k]
            last = np.take(g, n - 1, axis=k)
            d = n - 1
            while d > 0 and np.array_equal(np.take(g, d - 1, axis=k), last):
                d -= 1
            hi_idx.append(d)
        sl = tuple(slice(a, b + 1) for a, b in zip(lo_idx, hi_idx))
        lower = tuple(l + a for l, a in zip(self.lower, lo_idx))
        conductor = tuple(l + b for l, b in zip(self.lower, hi_idx))
        if lower == self.lower and conductor == self.conductor:
            return self
        return TruncatedSet(lower, conductor, g[sl])

    def rewindow(self, lower: Sequence[int], conductor: Sequence[int]) -> "TruncatedSet":
        """Same set, represented on a wider window (lower <= L, conductor >= C)."""
        if any(a > b for a, b in zip(lower, self.lower)) or any(a < b for a, b in zip(conductor, self.conductor)):
            raise RepresentationError("rewindow may only widen the window")
        return TruncatedSet(lower, conductor, self.window(lower, conductor))

    # -- set comparisons ----------------------------------------------

    def _common(self, other: "TruncatedSet"):
        if not isinstance(other, TruncatedSet):
            raise TypeError(f"expected TruncatedSet, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        lo = tuple(min(a, b) for a, b in zip(self.lower, other.lower))
        hi = tuple(max(a, b) for a, b in zip(self.conductor, other.conductor))
        return lo, hi

    def equals(self, other: "TruncatedSet") -> bool:
        lo, hi = self._common(other)
        return bool(np.array_equal(self.window(lo, hi), other.window(lo, hi)))

    def is_subset(self, other: "TruncatedSet") -> bool:
        lo, hi = self._common(other)
        return not bool((self.window(lo, hi) & ~other.window(lo, hi)).any())

    def first_difference(self, other: "TruncatedSet") -> Optional[Point]:
        """Lexicographically first point in exactly one of the two sets."""
        lo, hi = self._common(other)
        diff = self.window(lo, hi) ^ other.window(lo, hi)
        hits = np.argwhere(diff)
        if len(hits) == 0:
            return None
        return tuple(int(v) + l for v, l in zip(hits[0], lo))

    def union(self, other: "TruncatedSet") -> "TruncatedSet":
        lo, hi = self._common(other)
        return TruncatedSet(lo, hi, self.window(lo, hi) | other.window(lo, hi)).normalize()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSet):
            return NotImplemented
        return other.dim == self.dim and self.equals(other)

    def __le__(self, other):
        return self.is_subset(other)

    def __ge__(self, other):
        return other.is_subset(self)

    def __lt__(self, other):
        return self.is_subset(other) and not other.is_subset(self)

    def __hash__(self):
        n = self.normalize()
        return hash((n.lower, n.conductor, n.grid.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(lower={self.lower}, conductor={self.conductor}, small={list(self.small)})"


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class ValidationFinding:
    axiom: str  # "G1", "G2", "G3", "representation", or "semigroup"
    witness: Tuple[Point, ...]
    message: str

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": [list(p) for p in self.witness], "message": self.message}


def _meet_failures(T: TruncatedSet, limit: int) -> List[ValidationFinding]:
    pts = np.array(T.small, dtype=np.int64)
    L = np.array(T.lower, dtype=np.int64)
    out: List[ValidationFinding] = []
    chunk = 256
    for start in range(0, len(pts), chunk):
        a = pts[start:start + chunk]
        m = np.minimum(a[:, None, :], pts[None, :, :]) - L
        ok = T.grid[tuple(m[..., k] for k in range(T.dim))]
        for r, c in np.argwhere(~ok):
            i, j = start + int(r), int(c)
            if i < j:
                p, q = T.small[i], T.small[j]
                out.append(ValidationFinding(
                    "G1", (p, q), f"meet of {p} and {q} is {tuple(min(x, y) for x, y in zip(p, q))}, not a member"))
                if len(out) >= limit:
                    return out
    return out


def _sum_failures(T: TruncatedSet, limit: int) -> List[ValidationFinding]:
    pts = np.array(T.small, dtype=np.int64)
    L = np.array(T.lower, dtype=np.int64)
    C = np.array(T.conductor, dtype=np.int64)
    out: List[ValidationFinding] = []
    chunk = 256
    for start in range(0, len(pts), chunk):
        a = pts[start:start + chunk]
        s = a[:, None, :] + pts[None, :, :]
        below = (s < L).any(axis=-1)
        idx = np.minimum(s, C) - L
        idx = np.maximum(idx, 0)
        ok = T.grid[tuple(idx[..., k] for k in range(T.dim))] & ~below
        for r, c in np.argwhere(~ok):
            i, j = start + int(r), int(c)
            if i <= j:
                p, q = T.small[i], T.small[j]
                out.append(ValidationFinding("semigroup", (p, q), f"sum of {p} and {q} is not a member"))
                if len(out) >= limit:
                    return out
    return out


def _subsets(items: Sequence[int]):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


@dataclass
class G2Failure:
    meet: Point  # alpha ^ beta
    axis: int  # the shared coordinate
    differing: Tuple[int, ...]  # axes where alpha and beta differ
    alpha: Point
    beta: Point


def g2_failures(T: TruncatedSet, pad: int = 1, limit: Optional[int] = None) -> List[G2Failure]:
    """(G2) violations among members of the window ``[L, C + pad]``.

    A pair alpha, beta sharing coordinate i is described by its meet mu and
    the set D of axes where the two differ; the pair needs some delta with
    delta_i > mu_i, delta_D = mu_D and delta >= mu elsewhere. Everything is
    decided on suffix-or arrays over the window, so the cost does not grow
    with the number of pairs.
    """
    h = T.dim
    if h == 1:
        return []
    lo = T.lower
    hi = tuple(c + pad for c in T.conductor)
    G = T.window(lo, hi)

    # exact[A][mu]: some member x has x_A > mu_A and x = mu off A
    exact = {(): G}
    for A in _subsets(range(h)):
        if A and A not in exact:
            exact[A] = strict_suffix_any(exact[A[:-1]], A[-1])

    failures: List[G2Failure] = []
    realizable = {}
    for i in range(h):
        others = [j for j in range(h) if j != i]
        for D in _subsets(others):
            if not D:
                continue
            if D not in realizable:
                acc = np.zeros_like(G)
                for Da in _subsets(D):
                    Db = tuple(j for j in D if j not in Da)
                    acc |= exact[Da] & exact[Db]
                realizable[D] = acc
            lift = strict_suffix_any(G, i)
            for j in others:
                if j not in D:
                    lift = suffix_any(lift, j)
            # mu_i >= C_i is always lifted by mu + e_i, which lies past the window
            below = np.arange(G.shape[i]) < T.conductor[i] - lo[i]
            bad = realizable[D] & ~lift & along(below, i, h)
            for idx in np.argwhere(bad):
                mu = tuple(int(v) + l for v, l in zip(idx, lo))
                a, b = _g2_pair(G, exact, lo, tuple(int(v) for v in idx), D)
                failures.append(G2Failure(mu, i, D, a, b))
                if limit is not None and len(failures) >= limit:
                    return failures
    failures.sort(key=lambda f: (f.meet, f.axis, f.differing))
    return failures


def _g2_pair(G, exact, lo, idx, D):
    for Da in _subsets(D):
        Db = tuple(j for j in D if j not in Da)
        if exact[Da][idx] and exact[Db][idx]:
            return _exact_witness(G, lo, idx, Da), _exact_witness(G, lo, idx, Db)
    raise AssertionError("unrealizable pair")


def _exact_witness(G, lo, idx, A):
    sl = []
    for k, v in enumerate(idx):
        sl.append(slice(v + 1, None) if k in A else slice(v, v + 1))
    sub_ = G[tuple(sl)]
    first = np.argwhere(sub_)[0]
    out = []
    for k, v in enumerate(idx):
        out.append(lo[k] + v + (1 + int(first[k]) if k in A else 0))
    return tuple(out)


def validate(T: TruncatedSet, as_semigroup: bool = False, pad: int = 1, limit: int = 10) -> List[ValidationFinding]:
    """Check (G1), (G2) and, for semigroups, the monoid conditions.

    Returns an empty list when everything holds. At most `limit` findings are
    reported per axiom.
    """
    if pad < 1:
        raise ValueError("window pad must be >= 1")
    findings: List[ValidationFinding] = []
    if not T.grid[(-1,) * T.dim]:
        findings.append(ValidationFinding("G3", (T.conductor,), "conductor bound is not a member"))
    findings += _meet_failures(T, limit)
    for f in g2_failures(T, pad=pad, limit=limit):
        findings.append(ValidationFinding(
            "G2", (f.alpha, f.beta),
            f"{f.alpha} and {f.beta} share coordinate {f.axis}; no member delta with "
            f"delta_{f.axis} > {f.meet[f.axis]} matching meet {f.meet} on axes {list(f.differing)}"))
    if as_semigroup:
        h = T.dim
        if not T.contains(zeros(h)):
            findings.append(ValidationFinding("semigroup", (zeros(h),), "0 is not a member"))
        m = T.member_min()
        if any(v < 0 for v in m):
            findings.append(ValidationFinding("semigroup", (m,), "set is not contained in N^h"))
        findings += _sum_failures(T, limit)
    return findings


# -- good semigroups ------------------------------------------------------


class GoodSemigroup(TruncatedSet):
    """A validated good semigroup, always in normal form (lower 0, minimal conductor)."""

    __slots__ = ()

    def __init__(self, T: TruncatedSet, pad: int = 1):
        T = T.normalize()
        findings = validate(T, as_semigroup=True, pad=pad)
        if findings:
            raise NotGoodError(findings, "semigroup")
        super().__init__(T.lower, T.conductor, T.grid)

    @classmethod
    def from_small(cls, conductor, points) -> "GoodSemigroup":
        h = len(conductor)
        return cls(TruncatedSet.from_points(zeros(h), conductor, points))

    @classmethod
    def numerical(cls, generators: Iterable[int]) -> "GoodSemigroup":
        """Numerical semigroup <generators> as an h = 1 good semigroup."""
        gens = sorted(set(int(g) for g in generators if g > 0))
        if not gens:
            raise ValueError("need a positive generator")
        from math import gcd
        from functools import reduce

        if reduce(gcd, gens) != 1:
            raise ValueError("generators must be coprime")
        # Frobenius number < (min gen) * (max gen)
        bound = gens[0] * gens[-1] + 1
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            member[n] = any(n >= g and member[n - g] for g in gens)
        return cls(TruncatedSet((0,), (bound,), member))

    @property
    def is_ambient(self) -> bool:
        return all(c == 0 for c in self.conductor)

    @property
    def warnings(self) -> List[str]:
        return ["S equals ambient N^h"] if self.is_ambient else []

    @property
    def conductor_vector(self) -> Point:
        return self.conductor


def as_good_semigroup(T: TruncatedSet, pad: int = 1) -> Optional[GoodSemigroup]:
    """Re-root T as a good semigroup, or None when T is not one."""
    if isinstance(T, GoodSemigroup):
        return T
    try:
        return GoodSemigroup(T, pad=pad)
    except NotGoodError:
        return None


def is_good(T: TruncatedSet, pad: int = 1) -> bool:
    return not validate(T, pad=pad, limit=1)


def _nonzero_window_members(S: TruncatedSet) -> List[Point]:
    h = S.dim
    z = zeros(h)
    return [p for p in S.members(z, add(S.conductor, ones(h))) if p != z]


def is_local(S: TruncatedSet) -> bool:
    return not any(0 in p for p in _nonzero_window_members(S))


def multiplicity(S: TruncatedSet) -> Point:
    """Least nonzero member of a local semigroup."""
    if not is_local(S):
        raise NotLocalError("multiplicity undefined for non-local semigroup")
    pts = _nonzero_window_members(S)
    e = pts[0]
    for p in pts[1:]:
        e = tuple(min(x, y) for x, y in zip(e, p))
    return e


def delta_witness(T: TruncatedSet, b: Sequence[int]) -> Optional[Point]:
    """A member of Delta(b), or None when Delta(b) misses T.

    Coordinates at or beyond the conductor bound are interchangeable, so the
    search runs on the stored grid and the witness is lifted back afterwards.
    """
    b = tuple(b)
    T._check_dim(b)
    L, C = T.lower, T.conductor
    h = T.dim
    for i in range(h):
        if b[i] < L[i]:
            continue
        sl, starts = [], []
        for j in range(h):
            if j == i:
                gi = min(b[i], C[i])
                sl.append(gi - L[i])
                starts.append(None)
            else:
                s = min(max(b[j] + 1, L[j]), C[j])
                sl.append(slice(s - L[j], C[j] - L[j] + 1))
                starts.append(s)
        region = T.grid[tuple(sl)]
        if region.any():
            first = np.argwhere(np.atleast_1d(region))[0] if region.ndim else []
            out, r = [], 0
            for j in range(h):
                if j == i:
                    out.append(b[i])
                else:
                    v = starts[j] + int(first[r])
                    r += 1
                    if v >= C[j]:
                        v = max(C[j], b[j] + 1)
                    out.append(v)
            return tuple(out)
    return None


def delta_empty(T: TruncatedSet, b: Sequence[int]) -> bool:
    return delta_witness(T, b) is None


def frobenius(S: TruncatedSet) -> Point:
    """Frobenius vector c - 1 of a normalized semigroup."""
    gamma = sub(S.conductor, ones(S.dim))
    w = delta_witness(S, gamma)
    if w is not None:
        raise RepresentationError(f"Delta^S(gamma) contains {w}; representation is corrupted")
    return gamma
