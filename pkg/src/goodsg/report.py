"""Structured verdicts for identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .lattice import Point
from .truncated import TruncatedSet

REPORT_VERSION = 1

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "hypothesis-not-met"


def set_to_dict(T: TruncatedSet) -> dict:
    return {
        "lower": list(T.lower),
        "conductor": list(T.conductor),
        "small": [list(p) for p in T.small],
    }


@dataclass
class Report:
    identity: str
    status: str
    message: str = ""
    witness: Optional[Point] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    objects: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, with_objects: bool = True) -> dict:
        d = {
            "version": REPORT_VERSION,
            "identity": self.identity,
            "status": self.status,
            "message": self.message,
            "witness": list(self.witness) if self.witness is not None else None,
            "checks": dict(sorted(self.checks.items())),
        }
        if with_objects:
            d["objects"] = {
                k: set_to_dict(v) if isinstance(v, TruncatedSet) else v
                for k, v in sorted(self.objects.items())
            }
        return d


def set_check(report: Report, name: str, A: TruncatedSet, B: TruncatedSet) -> bool:
    """Record A == B as a sub-check, keeping the first differing point as witness."""
    ok = A.equals(B)
    report.checks[name] = ok
    if not ok and report.witness is None:
        report.witness = A.first_difference(B)
    return ok
