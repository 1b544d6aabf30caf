"""The standard canonical ideal and the symmetry-type predicates of local semigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ._grid import suffix_any
from .algebra import ideal_difference, ideal_sum, m_minus_e, maximal_ideal, translate
from .lattice import Point, zeros
from .report import FAIL, PASS, Report, set_check
from .truncated import (
    GoodSemigroup,
    InternalDefect,
    NotGoodError,
    NotLocalError,
    TruncatedSet,
    delta_empty,
    delta_witness,
    frobenius,
    is_local,
    multiplicity,
    validate,
)

__all__ = [
    "delta_empty",
    "delta_witness",
    "std_canonical",
    "delta_union",
    "is_symmetric",
    "almost_symmetry_criteria",
    "is_almost_symmetric",
    "is_med",
    "is_canonical_ideal",
    "check_duality",
    "Classification",
    "classify",
]


def _require_rooted(S: TruncatedSet) -> None:
    if any(l != 0 for l in S.lower):
        raise ValueError(f"semigroup must be normalized with lower 0, got {S.lower}")


def std_canonical(S: TruncatedSet) -> TruncatedSet:
    """K(S) = {a : Delta^S(gamma - a) is empty}, on the window [0, c].

    For a in [0, c] and b = gamma - a, a witness on axis i must have
    coordinate i equal to c_i - 1 - a_i and coordinates j != i at least
    c_j - a_j, which is a lookup into the suffix-or of S along the other axes.
    """
    _require_rooted(S)
    c = S.conductor
    h = S.dim
    G = S.grid
    hit = np.zeros(G.shape, dtype=bool)
    for i in range(h):
        up = G
        for j in range(h):
            if j != i:
                up = suffix_any(up, j)
        idx = []
        for k in range(h):
            a = np.arange(c[k] + 1)
            if k == i:
                idx.append(np.clip(c[k] - 1 - a, 0, None))
            else:
                idx.append(c[k] - a)
        val = up[np.ix_(*idx)]
        valid = (np.arange(c[i] + 1) <= c[i] - 1).reshape([-1 if k == i else 1 for k in range(h)])
        hit |= val & valid
    return TruncatedSet(zeros(h), c, ~hit).normalize()


def delta_union(K: TruncatedSet, a: Point, bound: Point) -> TruncatedSet:
    """K together with Delta(a), where bound = a + 1.

    Delta(a) is truncation-stable at a + 1: a point of it has one coordinate
    equal to a_i and all others beyond a_j.
    """
    h = K.dim
    lo = tuple(min(x, y) for x, y in zip(K.lower, a))
    hi = tuple(max(x, y) for x, y in zip(K.conductor, bound))
    base = K.window(lo, hi)
    shape = base.shape
    dmask = np.zeros(shape, dtype=bool)
    for i in range(h):
        sl = []
        for j in range(h):
            if j == i:
                sl.append(a[i] - lo[i])
            else:
                sl.append(slice(bound[j] - lo[j], None))
        dmask[tuple(sl)] = True
    return TruncatedSet(lo, hi, base | dmask).normalize()


def _components(S: TruncatedSet):
    from .structure import decompose

    return decompose(S).components


def is_symmetric(S: TruncatedSet) -> bool:
    verdict = std_canonical(S).equals(S)
    if not is_local(S):
        parts = _components(S)
        if all(std_canonical(p).equals(p) for p in parts) != verdict:
            raise InternalDefect("symmetry of S disagrees with symmetry of its components")
    return verdict


def almost_symmetry_criteria(S: TruncatedSet) -> Tuple[bool, Optional[bool]]:
    """(K + M == M, K u Delta(gamma) == M - M) for local S.

    The second criterion assumes S != N^h and is None for the ambient semigroup.
    """
    _require_rooted(S)
    M = maximal_ideal(S)
    K = std_canonical(S)
    first = ideal_sum(K, M).equals(M)
    if all(x == 0 for x in S.conductor):
        return first, None
    gamma = frobenius(S)
    second = delta_union(K, gamma, S.conductor).equals(ideal_difference(M, M))
    return first, second


def is_almost_symmetric(S: TruncatedSet) -> bool:
    if not is_local(S):
        return all(is_almost_symmetric(p) for p in _components(S))
    first, second = almost_symmetry_criteria(S)
    if second is not None and first != second:
        raise InternalDefect(
            f"almost-symmetry criteria disagree: K+M=M is {first}, K u Delta(gamma) = M-M is {second}")
    return first


def is_med(S: TruncatedSet) -> bool:
    if not is_local(S):
        raise NotLocalError("maximal embedding dimension is defined for local semigroups")
    M = maximal_ideal(S)
    return ideal_difference(M, M).equals(m_minus_e(S))


def is_canonical_ideal(S: TruncatedSet, Kp: TruncatedSet) -> Tuple[bool, Point]:
    """Whether Kp = K(S) + x; x is forced to be the least point of Kp."""
    findings = validate(Kp)
    if findings:
        raise NotGoodError(findings, "ideal")
    x = Kp.member_min()
    return translate(std_canonical(S), x).equals(Kp), x


def check_duality(
    S: TruncatedSet,
    K: TruncatedSet,
    I: TruncatedSet,
    pair: Optional[Tuple[TruncatedSet, TruncatedSet]] = None,
    pad: int = 1,
) -> Report:
    """Duality properties of a canonical ideal K against a good ideal I."""
    r = Report("DUALITY", PASS)
    KI = ideal_difference(K, I)
    set_check(r, "bidual", ideal_difference(K, KI), I)
    r.checks["dual_good"] = not validate(KI, pad=pad, limit=1)
    set_check(r, "self_dual", ideal_difference(K, K), S)
    if pair is not None:
        E, F = pair
        KE, KF = ideal_difference(K, E), ideal_difference(K, F)
        r.checks["antimonotone"] = E.is_subset(F) == KF.is_subset(KE)
        r.checks["antimonotone_reverse"] = F.is_subset(E) == KE.is_subset(KF)
        r.checks["injective"] = E.equals(F) == KE.equals(KF)
    r.objects.update({"K-I": KI})
    if not all(r.checks.values()):
        r.status = FAIL
        r.message = "failed: " + ", ".join(k for k, v in sorted(r.checks.items()) if not v)
    return r


@dataclass
class Classification:
    local: bool
    symmetric: bool
    almost_symmetric: bool
    med: Optional[bool]
    conductor: Point
    frobenius: Point
    multiplicity: Optional[Point]
    components: List["Classification"] = field(default_factory=list)
    supports: List[Tuple[int, ...]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "local": self.local,
            "symmetric": self.symmetric,
            "almost_symmetric": self.almost_symmetric,
            "med": self.med,
            "conductor": list(self.conductor),
            "frobenius": list(self.frobenius),
            "multiplicity": list(self.multiplicity) if self.multiplicity is not None else None,
            "supports": [list(s) for s in self.supports],
            "components": [c.to_dict() for c in self.components],
            "warnings": list(self.warnings),
        }
        return d


def classify(S: GoodSemigroup) -> Classification:
    from .structure import decompose

    local = is_local(S)
    warnings = list(S.warnings) if isinstance(S, GoodSemigroup) else []
    if local:
        return Classification(
            local=True,
            symmetric=is_symmetric(S),
            almost_symmetric=is_almost_symmetric(S),
            med=is_med(S),
            conductor=S.conductor,
            frobenius=frobenius(S),
            multiplicity=multiplicity(S),
            warnings=warnings,
        )
    dec = decompose(S)
    comps = [classify(p) for p in dec.components]
    return Classification(
        local=False,
        symmetric=is_symmetric(S),
        almost_symmetric=all(c.almost_symmetric for c in comps),
        med=None,
        conductor=S.conductor,
        frobenius=frobenius(S),
        multiplicity=None,
        components=comps,
        supports=list(dec.supports),
        warnings=warnings,
    )
