"""Batch verification over seeded random instances."""
from __future__ import annotations

from typing import Sequence

from .generator import GenConfig, random_good, random_good_ideal
from .report import FAIL, NOT_APPLICABLE, PASS, REPORT_VERSION
from .structure import IDENTITIES, verify_all
from .truncated import is_local


def instance_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index) % 2**63


def verify_suite(h: int, cap: Sequence[int], count: int, seed: int,
                 ids: Sequence[str] = IDENTITIES, ideals: int = 2, pad: int = 1) -> dict:
    ids = [i.upper() for i in ids]
    tally = {i: {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0} for i in ids}
    failures = []
    n_local = 0
    for k in range(count):
        s = instance_seed(seed, k)
        S = random_good(GenConfig(h, tuple(cap), seed=s))
        n_local += is_local(S)
        extra = [random_good_ideal(S, GenConfig(h, tuple(cap), seed=s + j + 1)) for j in range(ideals)]
        for r in verify_all(S, ids, ideals=extra, pad=pad):
            tally[r.identity][r.status] += 1
            if r.status == FAIL:
                failures.append({
                    "instance": k,
                    "seed": s,
                    "identity": r.identity,
                    "message": r.message,
                    "witness": list(r.witness) if r.witness is not None else None,
                    "conductor": list(S.conductor),
                    "small": [list(p) for p in S.small],
                })
    return {
        "version": REPORT_VERSION,
        "config": {"h": h, "cap": list(cap), "count": count, "seed": seed, "ideals": ideals,
                   "window_pad": pad, "identities": ids},
        "instances": count,
        "local": n_local,
        "nonlocal": count - n_local,
        "identities": tally,
        "failures": failures,
        "ok": not failures,
    }
