"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line with its
runtime. Tolerance is exact set equality throughout.
"""
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from goodsg import (GenConfig, GoodSemigroup, almost_symmetry_criteria, check_duality, classify,
                    decompose, enumerate_good, fileformat, ideal_difference, ideal_sum, is_local,
                    maximal_ideal, product, random_good, random_good_ideal, std_canonical, translate,
                    validate, verify_all, verify_identity)
from goodsg.generator import _box
from goodsg.structure import _Context
from goodsg.suite import instance_seed

from conftest import FIXTURES
from oracles import brute_good, naive_difference, naive_sum, powerset_good

SEED = 2024
N_RANDOM = 200
CAP = (8, 8)


@contextmanager
def criterion(capsys, n, title, budget=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        within = budget is None or dt < budget
        status = "PASS" if ok and within else "FAIL"
        limit = f" (budget {budget:g}s)" if budget else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {status}  {title}  [{dt:.2f}s{limit}]")
    assert within, f"criterion {n} took {dt:.2f}s, budget {budget}s"


def with_extra(S, white, n=12):
    return set(S.members((-2, -2), (n, n))) | {p for p in white if max(p) <= n}


def window(T, n=12):
    return set(T.members((-2, -2), (n, n)))


@pytest.fixture(scope="module")
def instances():
    """The seeded random corpus shared by criteria 3 to 6."""
    out = []
    for k in range(N_RANDOM):
        s = instance_seed(SEED, k)
        S = random_good(GenConfig(2, CAP, seed=s))
        ideals = [random_good_ideal(S, GenConfig(2, CAP, seed=s + j + 1)) for j in range(3)]
        out.append((s, S, ideals))
    return out


def test_01_fixture27(capsys):
    with criterion(capsys, 1, "fixture27: analyze flags, M-M, K(S)", budget=1.0):
        S = GoodSemigroup(fileformat.read(str(FIXTURES / "fixture27.gsg")))
        c = classify(S)
        assert c.local and c.multiplicity == (2, 2) and c.conductor == (4, 4) and c.frobenius == (3, 3)
        assert c.symmetric is False and c.almost_symmetric is True and c.med is True
        M = maximal_ideal(S)
        mm = {(0, 0), (1, 1)} | {(x, y) for x in range(2, 13) for y in range(2, 13)}
        assert window(ideal_difference(M, M)) == mm
        white = {(1, 1)} | {(2, y) for y in range(3, 13)} | {(y, 2) for y in range(3, 13)}
        assert window(std_canonical(S)) == with_extra(S, white)


def test_02_fixture26(capsys):
    with criterion(capsys, 2, "fixture26: K(S), M-M, THM24, med, almost symmetric", budget=1.0):
        S = GoodSemigroup(fileformat.read(str(FIXTURES / "fixture26.gsg")))
        white = ({(0, y) for y in range(3, 13)} | {(y, 0) for y in range(3, 13)}
                 | {(3, 5), (4, 5), (5, 5), (5, 3), (5, 4)})
        assert window(std_canonical(S)) == with_extra(S, white)
        M = maximal_ideal(S)
        mm = ({(0, 0)} | {(0, y) for y in range(3, 13)} | {(y, 0) for y in range(3, 13)}
              | {(x, y) for x in range(3, 13) for y in range(3, 13)})
        assert window(ideal_difference(M, M)) == mm
        r = verify_identity("THM24", S)
        assert r.passed and r.objects["m_minus_e_is_canonical_of_mm"]
        c = classify(S)
        assert c.med is False and c.almost_symmetric is True


def test_03_duality_suite(capsys, instances):
    with criterion(capsys, 3, f"duality on {N_RANDOM} semigroups x 3 good ideals", budget=120):
        failures = []
        for s, S, ideals in instances:
            K = std_canonical(S)
            for E in ideals:
                assert validate(E) == []
                r = check_duality(S, K, E)
                if not r.passed:
                    failures.append((s, r.message, r.witness))
            for E, F in combinations(ideals, 2):
                r = check_duality(S, K, E, pair=(E, F))
                if not r.passed:
                    failures.append((s, r.message, r.witness))
        assert failures == []


def test_04_almost_symmetry_criteria(capsys, instances):
    with criterion(capsys, 4, "K+M=M agrees with K u Delta(gamma) = M-M on local instances"):
        n_local = n_true = 0
        for s, S, _ in instances:
            if not is_local(S):
                continue
            n_local += 1
            first, second = almost_symmetry_criteria(S)
            assert first == second, f"criteria disagree on seed {s}"
            n_true += first
        assert n_local > 100 and 0 < n_true < n_local


def test_05_canonical_of_mm(capsys, instances):
    with criterion(capsys, 5, "K(M-M) = (K(S)-(M-M)) - e whenever M-M is good"):
        corpus = [S for _, S, _ in instances] + list(enumerate_good(2, (4, 4)))
        checked = 0
        for S in corpus:
            if not is_local(S):
                continue
            M = maximal_ideal(S)
            MM = ideal_difference(M, M)
            if validate(MM, as_semigroup=True):
                continue
            T = GoodSemigroup(MM)
            rhs = translate(ideal_difference(std_canonical(S), T), tuple(-x for x in M.lower))
            assert std_canonical(T) == rhs
            checked += 1
        assert checked > 100


def test_06_thm24_cor25_biconditionals(capsys, instances):
    with criterion(capsys, 6, "THM24 and COR25 both directions: exhaustive (4,4) plus random", budget=300):
        antecedent = {"THM24": "almost_symmetric", "COR25": "almost_symmetric_and_med"}
        sides = {"THM24": set(), "COR25": set()}
        enumerated = list(enumerate_good(2, (4, 4)))
        assert len(enumerated) == 79
        for S in enumerated + [S for _, S, _ in instances]:
            ctx = _Context(S)
            if ctx.local:
                for name in ("THM24", "COR25"):
                    r = verify_identity(name, S, context=ctx)
                    assert r.passed, (name, S.small, r.message)
                    sides[name].add(r.objects[antecedent[name]])
            else:
                for name in ("THM29", "COR210"):
                    assert verify_identity(name, S, context=ctx).ok
        # both directions were exercised with true and false antecedents
        assert sides["THM24"] == {True, False} and sides["COR25"] == {True, False}


def _local(seed, cap):
    for k in range(500):
        S = random_good(GenConfig(len(cap), cap, seed=seed * 1009 + k))
        if is_local(S):
            return S
    raise AssertionError("no local semigroup found")


def test_07_nonlocal_suite(capsys):
    with criterion(capsys, 7, "50 products: LEMMA11 KPROD PROP28 THM29 COR210 and decomposition", budget=120):
        failures = []
        for k in range(50):
            A = _local(SEED + 2 * k, (5, 5))
            B = _local(SEED + 2 * k + 1, (6,) if k % 2 else (4, 4))
            supports = [(0, 1), tuple(range(2, 2 + B.dim))]
            P = product([A, B], supports)
            dec = decompose(P)
            assert dec.supports == tuple(supports) and dec.components == (A, B)
            for r in verify_all(P, ["LEMMA11", "KPROD", "PROP28", "THM29", "COR210"]):
                if not r.passed:
                    failures.append((k, r.identity, r.status, r.message))
        assert failures == []


def _closed_unrepaired(seed):
    import random

    rng = random.Random(seed)
    box = _box((5, 5))
    pts = [box.index[(rng.randint(1, 5), rng.randint(0, 5))] for _ in range(rng.randint(1, 3))]
    return box.to_set(box.close(0, [0, len(box.points) - 1] + pts)).normalize()


def test_08_representation_oracle(capsys):
    with criterion(capsys, 8, "validate vs +2 window brute force; sum/difference vs naive"):
        verdicts = []
        for k in range(50):
            s = instance_seed(SEED + 8, k)
            T = random_good(GenConfig(2, (6, 6), seed=s)) if k % 2 else _closed_unrepaired(s)
            fast = not validate(T)
            assert fast == brute_good(T, pad=2), T
            verdicts.append(fast)
        assert True in verdicts and False in verdicts
        for k in range(20):
            s = instance_seed(SEED + 9, k)
            S = random_good(GenConfig(2, (5, 5), seed=s))
            E = random_good_ideal(S, GenConfig(2, (5, 5), seed=s + 1))
            F = random_good_ideal(S, GenConfig(2, (5, 5), seed=s + 2))
            lo = tuple(a + b - 2 for a, b in zip(E.lower, F.lower))
            hi = tuple(a + b + 2 for a, b in zip(E.conductor, F.conductor))
            assert set(ideal_sum(E, F).members(lo, hi)) == naive_sum(E, F, lo, hi)
            m = F.member_min()
            lo = tuple(l - x - 2 for l, x in zip(E.lower, m))
            hi = tuple(c - x + 2 for c, x in zip(E.conductor, m))
            assert set(ideal_difference(E, F).members(lo, hi)) == naive_difference(E, F, lo, hi)


def test_09_enumeration_regression(capsys):
    with criterion(capsys, 9, "enumerate_good(2,(3,3)) equals the power-set filter; pinned count 23"):
        found = [frozenset(S.members((0, 0), (3, 3))) for S in enumerate_good(2, (3, 3))]
        expected = powerset_good((3, 3))
        assert len(found) == len(set(found))
        assert set(found) == set(expected)
        assert len(found) == 23


def test_10_determinism(capsys, tmp_path):
    with criterion(capsys, 10, "verify-suite JSON is byte-identical across runs"):
        argv = [sys.executable, "-m", "goodsg", "verify-suite", "--h", "2", "--cap", "6", "6",
                "--count", "20", "--seed", "7"]
        a = subprocess.run(argv, capture_output=True, check=True).stdout
        b = subprocess.run(argv, capture_output=True, check=True).stdout
        assert a == b and b'"ok": true' in a
