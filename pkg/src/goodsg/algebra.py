"""Arithmetic of relative ideals: translation, sums and differences."""
from __future__ import annotations

import numpy as np

from .lattice import Point, add, check_range, neg_point, sub
from .truncated import (
    GoodSemigroupError,
    RepresentationError,
    TruncatedSet,
    multiplicity,
)


class EmptyIdealError(GoodSemigroupError):
    pass


def translate(E: TruncatedSet, x: Point) -> TruncatedSet:
    """The set x + E."""
    E._check_dim(x)
    return TruncatedSet(add(E.lower, x), add(E.conductor, x), E.grid)


def _members_array(T: TruncatedSet, lo, hi) -> np.ndarray:
    return np.argwhere(T.window(lo, hi)) + np.array(lo, dtype=np.int64)


def ideal_sum(E: TruncatedSet, F: TruncatedSet) -> TruncatedSet:
    """Minkowski sum E + F.

    The sum is truncation-stable at C_E + C_F, so only the box
    [L_E + L_F, C_E + C_F] is computed. A summand a of E can only contribute
    there when a <= C_E + C_F - L_F.
    """
    E._common(F)
    lo = add(E.lower, F.lower)
    hi = add(E.conductor, F.conductor)
    shape = tuple(b - a + 1 for a, b in zip(lo, hi))
    a_hi = sub(hi, F.lower)
    summands = _members_array(E, E.lower, a_hi)
    # F on the union of all shifted windows [lo - a, hi - a]
    f_lo = sub(lo, a_hi)
    f_hi = sub(hi, E.lower)
    Fw = F.window(f_lo, f_hi)
    out = np.zeros(shape, dtype=bool)
    for a in summands:
        start = [int(l - x - fl) for l, x, fl in zip(lo, a, f_lo)]
        out |= Fw[tuple(slice(s, s + n) for s, n in zip(start, shape))]
    return TruncatedSet(lo, hi, out).normalize()


def ideal_difference(E: TruncatedSet, F: TruncatedSet) -> TruncatedSet:
    """E - F = {a : a + F is contained in E}.

    With m the least point of F, candidates live in [L_E - m, C_E - m]; above
    that box everything is a member. For a candidate a, an element f of F can
    be replaced by f ^ W with W = max(C_F, C_E - L_E + m) without changing the
    membership of f or of a + f, so only F inside [m, W] is tested.
    """
    E._common(F)
    m = F.member_min()
    lo = sub(E.lower, m)
    hi = sub(E.conductor, m)
    h = E.dim
    shape = tuple(b - a + 1 for a, b in zip(lo, hi))
    W = tuple(max(cf, ce - le + mi) for cf, ce, le, mi in zip(F.conductor, E.conductor, E.lower, m))
    tests = _members_array(F, m, W)
    if len(tests) == 0:
        raise EmptyIdealError("F has no members in its window")
    Ew = E.window(add(lo, m), add(hi, W))
    out = np.ones(shape, dtype=bool)
    for f in tests:
        start = [int(x - mi) for x, mi in zip(f, m)]
        out &= Ew[tuple(slice(s, s + n) for s, n in zip(start, shape))]
        if not out.any():
            break
    if not out[(-1,) * h]:
        raise RepresentationError("difference lost its conductor element")
    return TruncatedSet(check_range(lo), check_range(hi), out).normalize()


def maximal_ideal(S: TruncatedSet) -> TruncatedSet:
    """M = S minus the origin, for local S."""
    e = multiplicity(S)
    hi = tuple(max(c, x) for c, x in zip(S.conductor, e))
    w = S.window(e, hi)
    if all(x == 0 for x in e):  # pragma: no cover - multiplicity is nonzero
        raise RepresentationError("zero multiplicity")
    return TruncatedSet(e, hi, w).normalize()


def m_minus_e(S: TruncatedSet) -> TruncatedSet:
    """The set translate M - e."""
    return translate(maximal_ideal(S), neg_point(multiplicity(S)))


def bidual(S: TruncatedSet, E: TruncatedSet) -> TruncatedSet:
    return ideal_difference(S, ideal_difference(S, E))


def is_relative_ideal(S: TruncatedSet, E: TruncatedSet) -> bool:
    """E + S is contained in E (membership in a bounded-below set is automatic)."""
    return ideal_sum(E, S).is_subset(E)
