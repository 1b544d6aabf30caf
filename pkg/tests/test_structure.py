import pytest
from hypothesis import given, strategies as st

from goodsg import (IDENTITIES, GenConfig, GoodSemigroup, SupportError, TruncatedSet, UnknownIdentity, decompose,
                    ideal_difference, interleave_product, is_local, jacobson, maximal_ideal, multiplicity_vector,
                    product, random_good, std_canonical, validate, verify_all, verify_identity)
from oracles import Member

seeds = st.integers(0, 2**32)
T1 = GoodSemigroup.numerical([3, 4, 5])
N23 = GoodSemigroup.numerical([2, 3])


def permute(T, perm):
    """Relabel axes: new axis k is old axis perm[k]."""
    return TruncatedSet([T.lower[p] for p in perm], [T.conductor[p] for p in perm], T.grid.transpose(perm))


def local_gen(seed, cap=(5, 5)):
    for k in range(200):
        S = random_good(GenConfig(len(cap), cap, seed=seed * 7919 + k))
        if is_local(S):
            return S
    raise AssertionError("no local instance")


def test_product_examples(S26, S27):
    M = maximal_ideal(S26)
    assert product([T1, T1], [(0,), (1,)]) == ideal_difference(M, M)
    P = product([S27, N23], [(0, 1), (2,)])
    assert validate(P, as_semigroup=True) == []
    m = Member.of(P)
    assert m((2, 2, 2)) and m((2, 2, 0)) and not m((2, 2, 1)) and not m((1, 1, 0))
    assert product([S27], [(0, 1)]) == S27


def test_product_rejects_bad_supports(S27):
    with pytest.raises(SupportError):
        product([S27, N23], [(0, 1), (1,)])
    with pytest.raises(SupportError):
        product([S27, N23], [(0,), (1, 2)])


def test_interleaving_puts_parts_on_their_axes(S27):
    P = interleave_product([N23, S27], [(1,), (0, 2)])
    assert P.conductor == (4, 2, 4)
    assert (2, 0, 2) in P and (2, 2, 2) in P and (2, 1, 2) not in P and (2, 0, 3) not in P


def test_decompose_examples(S26, S27, P3):
    M = maximal_ideal(S26)
    d = decompose(GoodSemigroup(ideal_difference(M, M)))
    assert d.supports == ((0,), (1,))
    assert all(c == T1 for c in d.components)
    d = decompose(S27)
    assert d.supports == ((0, 1),) and d.components[0] == S27
    d = decompose(P3)
    assert d.supports == ((0, 1), (2,))
    assert d.components[0] == S27 and d.components[1] == N23


def test_decompose_ambient_is_all_singletons():
    d = decompose(GoodSemigroup(TruncatedSet.ambient(3)))
    assert d.supports == ((0,), (1,), (2,))


def test_jacobson_examples(S27, P3):
    assert jacobson(S27) == maximal_ideal(S27)
    TT = product([T1, T1], [(0,), (1,)])
    MT = maximal_ideal(T1)
    assert jacobson(TT) == interleave_product([MT, MT], [(0,), (1,)])
    J = jacobson(P3)
    assert J == interleave_product([maximal_ideal(S27), maximal_ideal(N23)], [(0, 1), (2,)])
    assert multiplicity_vector(P3) == (2, 2, 2)


def test_verify_examples(S26, S27):
    assert verify_identity("THM24", S26).passed
    assert verify_identity("cor25", S27).passed
    SS = product([S27, S27], [(0, 1), (2, 3)])
    r = verify_identity("PROP28", SS)
    assert r.passed, r.message
    with pytest.raises(UnknownIdentity):
        verify_identity("THM99", S27)


def test_all_identities_on_fixtures(S26, S27, P3):
    for S in (S26, S27, P3):
        for r in verify_all(S):
            assert r.ok, (r.identity, r.message)
    local_only = {r.identity: r.status for r in verify_all(P3)}
    assert local_only["THM24"] == "hypothesis-not-met"


def test_hypothesis_not_met_for_ambient_factor():
    P = product([T1, GoodSemigroup(TruncatedSet.ambient(1))], [(0,), (1,)])
    assert verify_identity("PROP28", P).status == "hypothesis-not-met"


def test_report_json_shape(S27):
    d = verify_identity("PROP23", S27).to_dict()
    assert set(d) == {"version", "identity", "status", "message", "checks", "objects", "witness"}
    assert d["status"] == "pass" and d["version"] == 1
    assert set(d["objects"]) == {"M-M", "K(M-M)"}
    assert len(IDENTITIES) == 10


@given(seeds, seeds)
def test_decompose_inverts_product(a, b):
    A, B = local_gen(a), local_gen(b, cap=(4,))
    P = product([A, B], [(0, 2), (1,)])
    d = decompose(P)
    assert d.supports == ((0, 2), (1,))
    assert d.components[0] == A and d.components[1] == B


@given(seeds, seeds, st.permutations(range(3)))
def test_decomposition_is_relabeling_invariant(a, b, perm):
    A, B = local_gen(a), local_gen(b, cap=(4,))
    P = product([A, B], [(0, 1), (2,)])
    Q = GoodSemigroup(permute(P, perm))
    inv = {old: new for new, old in enumerate(perm)}
    expected = sorted(tuple(sorted(inv[x] for x in blk)) for blk in ((0, 1), (2,)))
    assert sorted(decompose(Q).supports) == expected


@given(seeds, seeds)
def test_nonlocal_identities(a, b):
    A, B = local_gen(a), local_gen(b)
    P = product([A, B], [(0, 1), (2, 3)])
    J = jacobson(P)
    assert validate(J) == []
    for r in verify_all(P, ["LEMMA11", "KPROD", "PROP28", "THM29", "COR210"]):
        assert r.ok, (r.identity, r.message, r.witness)


@given(seeds)
def test_kprod_for_generated(seed):
    S = random_good(GenConfig(2, (6, 6), seed=seed))
    d = decompose(S)
    K = interleave_product([std_canonical(c) for c in d.components], d.supports)
    assert K == std_canonical(S)
