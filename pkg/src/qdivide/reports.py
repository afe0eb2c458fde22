"""Aggregate result of a parameter-grid sweep."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def _sort_key(failure):
    params, detail = failure
    return (sorted(params.items()), detail)


@dataclass
class ScanReport:
    """Outcome of sweeping one theorem over a grid.

    ``failures`` holds ``(params, detail)`` pairs and is empty exactly when
    the theorem held on every grid point.  ``notes`` carries discrepancies
    that are reported but are not counterexamples to the scanned claim.
    """

    identity_tag: str
    total_cases: int = 0
    failures: list[tuple[dict, str]] = field(default_factory=list)
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def canonicalize(self) -> ScanReport:
        self.failures.sort(key=_sort_key)
        return self

    def to_json(self) -> dict:
        return {
            "identity_tag": self.identity_tag,
            "total_cases": self.total_cases,
            "failures": [{"params": p, "detail": d} for p, d in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, obj) -> ScanReport:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            identity_tag=obj["identity_tag"],
            total_cases=obj["total_cases"],
            failures=[(f["params"], f["detail"]) for f in obj["failures"]],
            elapsed_ms=obj["elapsed_ms"],
            notes=list(obj.get("notes", [])),
        )

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] {self.identity_tag}: {self.total_cases} cases, "
            f"{len(self.failures)} failures, {self.elapsed_ms} ms"
        )
