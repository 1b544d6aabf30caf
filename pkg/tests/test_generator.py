import pytest
from hypothesis import given, strategies as st

from goodsg import (EnumerationTooLarge, GenConfig, enumerate_good, fileformat,
                    ideal_sum, is_local, is_relative_ideal, random_good, random_good_ideal, std_canonical,
                    translate, validate)
from oracles import powerset_good

seeds = st.integers(0, 2**40)


def member_sets(sems, cap):
    return {frozenset(S.members((0,) * len(cap), cap)) for S in sems}


@pytest.mark.parametrize("h, cap", [(1, (4,)), (1, (7,)), (2, (1, 1)), (2, (2, 2))])
def test_enumeration_matches_powerset(h, cap):
    found = list(enumerate_good(h, cap))
    expected = powerset_good(cap)
    assert len(found) == len(expected)
    assert member_sets(found, cap) == set(expected)


def test_numerical_semigroups_with_small_frobenius():
    got = {S.small for S in enumerate_good(1, (4,))}
    assert ((0,),) in got  # N
    assert ((0,), (2,), (4,)) in got  # <2,5>
    assert ((0,), (3,)) in got  # <3,4,5>
    assert len(got) == 5


def test_enumeration_contains_fixture(S27):
    assert any(S == S27 for S in enumerate_good(2, (4, 4)))


def test_enumeration_baselines():
    # counts recorded from the first exhaustive run, N^2 included
    assert sum(1 for _ in enumerate_good(2, (3, 3))) == 23
    assert sum(1 for _ in enumerate_good(2, (4, 4))) == 79


def test_enumeration_is_deterministic_and_valid():
    a = [fileformat.serialize(S) for S in enumerate_good(2, (3, 3))]
    b = [fileformat.serialize(S) for S in enumerate_good(2, (3, 3))]
    assert a == b and len(set(a)) == len(a)
    for S in enumerate_good(2, (3, 3)):
        assert validate(S, as_semigroup=True) == []
        assert all(c <= 3 for c in S.conductor)


def test_enumeration_refuses_large_boxes():
    with pytest.raises(EnumerationTooLarge, match=r"\(5, 5\)"):
        list(enumerate_good(2, (6, 5)))
    with pytest.raises(EnumerationTooLarge):
        list(enumerate_good(3, (1, 1, 1)))


def test_genconfig_validation():
    with pytest.raises(ValueError):
        GenConfig(2, (0, 3))
    with pytest.raises(ValueError):
        GenConfig(2, (3,))
    with pytest.raises(ValueError):
        GenConfig(2, (3, 3), max_rounds=0)


@given(seeds)
def test_random_good_is_deterministic_and_valid(seed):
    cfg = GenConfig(2, (6, 6), seed=seed)
    S = random_good(cfg)
    assert fileformat.serialize(S) == fileformat.serialize(random_good(cfg))
    assert validate(S, as_semigroup=True) == []
    assert not S.is_ambient
    assert all(c <= 6 for c in S.conductor)


def test_random_good_h1_and_h3():
    S = random_good(GenConfig(1, (9,), seed=3))
    assert validate(S, as_semigroup=True) == []
    S = random_good(GenConfig(3, (3, 3, 3), seed=3))
    assert validate(S, as_semigroup=True) == []


def test_local_and_nonlocal_both_occur():
    tally = [is_local(random_good(GenConfig(2, (6, 6), seed=s))) for s in range(1000)]
    assert sum(tally) >= 1 and len(tally) - sum(tally) >= 1


@given(seeds)
def test_random_good_ideal(seed):
    S = random_good(GenConfig(2, (5, 5), seed=seed))
    cfg = GenConfig(2, (5, 5), seed=seed + 17)
    E = random_good_ideal(S, cfg)
    assert fileformat.serialize(E) == fileformat.serialize(random_good_ideal(S, cfg))
    assert validate(E) == []
    assert is_relative_ideal(S, E)
    assert ideal_sum(E, S) == E
    m = E.member_min()
    # E contains a translate of S; the least point of E is a candidate start
    assert any(translate(S, tuple(a + d for a, d in zip(m, off))) <= E
               for off in [(i, j) for i in range(9) for j in range(9)])


def test_canonical_ideal_injection_happens(S27):
    K = std_canonical(S27)
    hits = 0
    for s in range(60):
        E = random_good_ideal(S27, GenConfig(2, (4, 4), seed=s))
        hits += translate(K, E.member_min()) == E
    assert hits > 0


def test_union_of_translates_is_repaired(S27):
    for s in range(30):
        E = random_good_ideal(S27, GenConfig(2, (4, 4), seed=s, canonical_prob=0.0))
        assert validate(E) == []
