"""Direct-product structure of good semigroups and the identity verifier."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import ideal_difference, m_minus_e, maximal_ideal, translate
from .canonical import is_almost_symmetric, is_med, is_symmetric, std_canonical
from .lattice import Point, neg_point
from .report import FAIL, NOT_APPLICABLE, PASS, Report, set_check
from .truncated import (
    GoodSemigroup,
    GoodSemigroupError,
    InternalDefect,
    TruncatedSet,
    as_good_semigroup,
    is_local,
    multiplicity,
    validate,
)

Supports = Tuple[Tuple[int, ...], ...]


class SupportError(GoodSemigroupError, ValueError):
    pass


def _check_supports(supports: Sequence[Sequence[int]], dims: Sequence[int]) -> Supports:
    supports = tuple(tuple(sorted(int(a) for a in s)) for s in supports)
    if len(supports) != len(dims):
        raise SupportError(f"{len(supports)} supports for {len(dims)} parts")
    for s, d in zip(supports, dims):
        if len(s) != d:
            raise SupportError(f"support {s} does not match part dimension {d}")
    flat = sorted(a for s in supports for a in s)
    if flat != list(range(len(flat))):
        raise SupportError(f"supports {supports} do not partition the axes")
    return supports


def interleave_product(parts: Sequence[TruncatedSet], supports: Sequence[Sequence[int]]) -> TruncatedSet:
    """Cartesian product, with part k occupying the axes supports[k] in increasing order."""
    supports = _check_supports(supports, [p.dim for p in parts])
    h = sum(p.dim for p in parts)
    order = [a for s in supports for a in s]
    lower = [0] * h
    conductor = [0] * h
    grid = np.ones((), dtype=bool)
    for p, s in zip(parts, supports):
        for k, a in enumerate(s):
            lower[a] = p.lower[k]
            conductor[a] = p.conductor[k]
        grid = grid.reshape(grid.shape + (1,) * p.dim) & p.grid.reshape((1,) * grid.ndim + p.grid.shape)
    perm = [order.index(a) for a in range(h)]
    return TruncatedSet(lower, conductor, np.transpose(grid, perm))


def projection(T: TruncatedSet, axes: Sequence[int]) -> TruncatedSet:
    axes = tuple(axes)
    rest = tuple(a for a in range(T.dim) if a not in axes)
    g = T.grid.any(axis=rest) if rest else T.grid
    return TruncatedSet([T.lower[a] for a in axes], [T.conductor[a] for a in axes], g).normalize()


def product(parts: Sequence[TruncatedSet], supports: Sequence[Sequence[int]]) -> GoodSemigroup:
    return GoodSemigroup(interleave_product(parts, supports))


@dataclass(frozen=True)
class Decomposition:
    supports: Supports
    components: Tuple[GoodSemigroup, ...]

    def __len__(self):
        return len(self.components)

    def to_dict(self) -> dict:
        return {
            "supports": [list(s) for s in self.supports],
            "components": [
                {"lower": list(c.lower), "conductor": list(c.conductor), "small": [list(p) for p in c.small]}
                for c in self.components
            ],
        }


def splits(T: TruncatedSet, axes: Sequence[int]) -> bool:
    """Whether T is the product of its projections onto `axes` and the remaining axes."""
    A = tuple(sorted(axes))
    B = tuple(a for a in range(T.dim) if a not in A)
    if not A or not B:
        return True
    return interleave_product([projection(T, A), projection(T, B)], [A, B]).equals(T)


def decompose(S: TruncatedSet) -> Decomposition:
    """Finest splitting of S into a product of local semigroups.

    Valid splittings are closed under intersection of sides, so the block of
    axis i is the intersection of every valid side containing i.
    """
    h = S.dim
    memo: Dict[Tuple[int, ...], bool] = {}

    def ok(A):
        if A not in memo:
            memo[A] = splits(S, A)
        return memo[A]

    blocks: List[Tuple[int, ...]] = []
    seen = set()
    for i in range(h):
        if i in seen:
            continue
        others = [a for a in range(h) if a != i]
        block = set(range(h))
        for r in range(0, len(others)):
            for extra in combinations(others, r):
                A = tuple(sorted((i,) + extra))
                if ok(A):
                    block &= set(A)
        blocks.append(tuple(sorted(block)))
        seen |= block
    blocks.sort(key=lambda b: b[0])
    if sorted(a for b in blocks for a in b) != list(range(h)):
        raise InternalDefect(f"decomposition blocks {blocks} do not partition the axes")
    comps = tuple(GoodSemigroup(projection(S, b)) for b in blocks)
    for c in comps:
        if not is_local(c):
            raise InternalDefect(f"component {c} of the finest decomposition is not local")
    if not interleave_product(comps, blocks).equals(S):
        raise InternalDefect("components do not reconstruct the semigroup")
    return Decomposition(tuple(blocks), comps)


def jacobson(S: TruncatedSet, dec: Optional[Decomposition] = None) -> TruncatedSet:
    """J = M_1 x ... x M_r over the local factors."""
    dec = dec or decompose(S)
    return interleave_product([maximal_ideal(c) for c in dec.components], dec.supports).normalize()


def multiplicity_vector(S: TruncatedSet, dec: Optional[Decomposition] = None) -> Point:
    dec = dec or decompose(S)
    e = [0] * S.dim
    for c, s in zip(dec.components, dec.supports):
        for k, a in enumerate(s):
            e[a] = multiplicity(c)[k]
    return tuple(e)


# -- identity verification -------------------------------------------------

IDENTITIES = ("LEMMA11", "KPROD", "PROP23", "THM24", "COR25", "PROP28", "THM29", "COR210", "LEMMA14", "LEMMA15")
LOCAL_IDENTITIES = ("PROP23", "THM24", "COR25")
GLOBAL_IDENTITIES = ("LEMMA11", "KPROD", "PROP28", "THM29", "COR210")


class UnknownIdentity(GoodSemigroupError, KeyError):
    pass


def _finish(r: Report, ok_message: str) -> Report:
    if r.status == NOT_APPLICABLE:
        return r
    if all(r.checks.values()):
        r.status = PASS
        r.message = r.message or ok_message
    else:
        r.status = FAIL
        failed = ", ".join(k for k, v in sorted(r.checks.items()) if not v)
        r.message = f"failed: {failed}"
    return r


def _na(name: str, why: str) -> Report:
    return Report(name, NOT_APPLICABLE, message=why)


def _no_ambient_factor(dec: Decomposition) -> bool:
    return not any(c.is_ambient for c in dec.components)


def _lemma11(S, ctx):
    dec = ctx.dec
    J = ctx.J
    r = Report("LEMMA11", PASS)
    rhs = interleave_product([ideal_difference(maximal_ideal(c), maximal_ideal(c)) for c in dec.components],
                             dec.supports)
    set_check(r, "jj_is_product", ctx.JJ, rhs)
    r.objects.update({"J": J, "J-J": ctx.JJ})
    return _finish(r, "J-J equals the product of the M_i-M_i")


def _kprod(S, ctx):
    r = Report("KPROD", PASS)
    rhs = interleave_product([std_canonical(c) for c in ctx.dec.components], ctx.dec.supports)
    set_check(r, "k_is_product", ctx.K, rhs)
    r.objects["K"] = ctx.K
    return _finish(r, "K(S) equals the product of the K(S_i)")


def _local_context(S, ctx, name):
    if not ctx.local:
        return _na(name, "S is not local")
    return None


def _prop23(S, ctx):
    na = _local_context(S, ctx, "PROP23")
    if na:
        return na
    if S.is_ambient:
        return _na("PROP23", "S equals N^h")
    if ctx.T is None:
        return _na("PROP23", "M-M is not a good semigroup")
    r = Report("PROP23", PASS)
    rhs = translate(ideal_difference(ctx.K, ctx.T), neg_point(ctx.e))
    set_check(r, "canonical_of_mm", std_canonical(ctx.T), rhs)
    r.objects.update({"M-M": ctx.T, "K(M-M)": std_canonical(ctx.T)})
    return _finish(r, "K(M-M) = (K(S)-(M-M)) - e")


def _thm24(S, ctx):
    na = _local_context(S, ctx, "THM24")
    if na:
        return na
    r = Report("THM24", PASS)
    almost = is_almost_symmetric(S)
    canon = ctx.T is not None and std_canonical(ctx.T).equals(m_minus_e(S))
    r.objects.update({"almost_symmetric": almost, "mm_good": ctx.T is not None,
                      "m_minus_e_is_canonical_of_mm": canon})
    r.checks["forward"] = (not almost) or canon
    r.checks["backward"] = (not canon) or almost
    return _finish(r, f"biconditional holds (almost symmetric: {almost})")


def _cor25(S, ctx):
    na = _local_context(S, ctx, "COR25")
    if na:
        return na
    r = Report("COR25", PASS)
    lhs = is_almost_symmetric(S) and is_med(S)
    rhs = ctx.T is not None and is_symmetric(ctx.T)
    r.objects.update({"almost_symmetric_and_med": lhs, "mm_symmetric_good": rhs})
    r.checks["forward"] = (not lhs) or rhs
    r.checks["backward"] = (not rhs) or lhs
    return _finish(r, f"biconditional holds (both sides {lhs})")


def _prop28(S, ctx):
    if S.is_ambient or not _no_ambient_factor(ctx.dec):
        return _na("PROP28", "some local factor equals N^h_i")
    if ctx.TJ is None:
        return _na("PROP28", "J-J is not a good semigroup")
    r = Report("PROP28", PASS)
    rhs = translate(ideal_difference(ctx.K, ctx.TJ), neg_point(ctx.e))
    set_check(r, "canonical_of_jj", std_canonical(ctx.TJ), rhs)
    r.objects.update({"J-J": ctx.TJ})
    return _finish(r, "K(J-J) = (K(S)-(J-J)) - e")


def _thm29(S, ctx):
    if S.is_ambient:
        return _na("THM29", "S equals N^h")
    r = Report("THM29", PASS)
    almost = is_almost_symmetric(S)
    canon = ctx.TJ is not None and std_canonical(ctx.TJ).equals(translate(ctx.J, neg_point(ctx.e)))
    r.objects.update({"almost_symmetric": almost, "jj_good": ctx.TJ is not None,
                      "j_minus_e_is_canonical_of_jj": canon})
    r.checks["forward"] = (not almost) or canon
    r.checks["backward"] = (not canon) or almost
    return _finish(r, f"biconditional holds (almost symmetric: {almost})")


def _cor210(S, ctx):
    if S.is_ambient:
        return _na("COR210", "S equals N^h")
    r = Report("COR210", PASS)
    lhs = is_almost_symmetric(S) and ctx.JJ.equals(translate(ctx.J, neg_point(ctx.e)))
    rhs = ctx.TJ is not None and is_symmetric(ctx.TJ)
    r.objects.update({"almost_symmetric_and_jj_eq_j_minus_e": lhs, "jj_symmetric_good": rhs})
    r.checks["forward"] = (not lhs) or rhs
    r.checks["backward"] = (not rhs) or lhs
    return _finish(r, f"biconditional holds (both sides {lhs})")


def ideal_family(S, ctx, extra: Iterable[TruncatedSet] = ()) -> Dict[str, TruncatedSet]:
    """Named good relative ideals of S used by the duality checks."""
    fam = {"S": S, "K": ctx.K, "J": ctx.J, "J-J": ctx.JJ, "K+e": translate(ctx.K, ctx.e)}
    for k, E in enumerate(extra):
        fam[f"I{k}"] = E
    return {k: v for k, v in fam.items() if not validate(v, pad=ctx.pad, limit=1)}


def _lemma14(S, ctx):
    r = Report("LEMMA14", PASS)
    K = ctx.K
    fam = ideal_family(S, ctx, ctx.extra)
    duals = {k: ideal_difference(K, E) for k, E in fam.items()}
    set_check(r, "K-K=S", ideal_difference(K, K), S)
    for k, E in fam.items():
        set_check(r, f"bidual[{k}]", ideal_difference(K, duals[k]), E)
    names = sorted(fam)
    for a in names:
        for b in names:
            if a < b:
                sub_ok = fam[a].is_subset(fam[b]) == duals[b].is_subset(duals[a])
                sub_ok &= fam[b].is_subset(fam[a]) == duals[a].is_subset(duals[b])
                r.checks[f"antimonotone[{a},{b}]"] = sub_ok
    r.objects["family"] = names
    return _finish(r, f"duality holds on {len(names)} good ideals")


def _lemma15(S, ctx):
    r = Report("LEMMA15", PASS)
    fam = ideal_family(S, ctx, ctx.extra)
    for k, E in fam.items():
        r.checks[f"good[K-{k}]"] = not validate(ideal_difference(ctx.K, E), pad=ctx.pad, limit=1)
    r.objects["family"] = sorted(fam)
    return _finish(r, f"K-E is good for {len(fam)} good ideals")


_VERIFIERS: Dict[str, Callable] = {
    "LEMMA11": _lemma11,
    "KPROD": _kprod,
    "PROP23": _prop23,
    "THM24": _thm24,
    "COR25": _cor25,
    "PROP28": _prop28,
    "THM29": _thm29,
    "COR210": _cor210,
    "LEMMA14": _lemma14,
    "LEMMA15": _lemma15,
}


class _Context:
    """Lazily computed intermediate objects shared by the verifiers."""

    def __init__(self, S: GoodSemigroup, extra=(), pad=1):
        self.S = S
        self.extra = tuple(extra)
        self.pad = pad
        self.local = is_local(S)
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def dec(self):
        return self._get("dec", lambda: decompose(self.S))

    @property
    def K(self):
        return self._get("K", lambda: std_canonical(self.S))

    @property
    def J(self):
        return self._get("J", lambda: jacobson(self.S, self.dec))

    @property
    def JJ(self):
        return self._get("JJ", lambda: ideal_difference(self.J, self.J))

    @property
    def TJ(self):
        return self._get("TJ", lambda: as_good_semigroup(self.JJ, pad=self.pad))

    @property
    def e(self):
        return self._get("e", lambda: multiplicity_vector(self.S, self.dec))

    @property
    def T(self):
        def mm():
            M = maximal_ideal(self.S)
            return as_good_semigroup(ideal_difference(M, M), pad=self.pad)
        return self._get("T", mm)


def verify_identity(name: str, S: GoodSemigroup, ideals: Iterable[TruncatedSet] = (), pad: int = 1,
                    context: Optional[_Context] = None) -> Report:
    """Check one named identity on S; hypotheses that fail yield a not-applicable report."""
    key = name.upper()
    if key not in _VERIFIERS:
        raise UnknownIdentity(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    ctx = context or _Context(S, ideals, pad)
    return _VERIFIERS[key](S, ctx)


def verify_all(S: GoodSemigroup, names: Sequence[str] = IDENTITIES, ideals=(), pad: int = 1) -> List[Report]:
    ctx = _Context(S, ideals, pad)
    return [verify_identity(n, S, context=ctx) for n in names]
