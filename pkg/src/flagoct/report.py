"""Structured results for the verification suites.

A report is a list of checks, each with a stable id, a human-readable
description, a pass/fail/skipped status, a details string, and an anchor
naming the mathematical fact being verified.  Reports render identically
(same check set, same ids) as text or JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

STATUSES = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    status: str
    details: str = ""
    anchor: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")

    @staticmethod
    def from_bool(
        id: str, description: str, ok: bool, details: str = "", anchor: str = ""
    ) -> "Check":
        return Check(id, description, "pass" if ok else "fail", details, anchor)


@dataclass
class VerificationReport:
    suite: str
    seed: int
    degree_cutoff: int
    checks: List[Check] = field(default_factory=list)
    runtime_ms: Optional[int] = None

    def add(self, check: Check) -> None:
        if any(c.id == check.id for c in self.checks):
            raise ValueError(f"duplicate check id {check.id!r}")
        self.checks.append(check)

    def add_bool(
        self, id: str, description: str, ok: bool, details: str = "", anchor: str = ""
    ) -> None:
        self.add(Check.from_bool(id, description, ok, details, anchor))

    def sorted_checks(self) -> List[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    @property
    def summary(self) -> Dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return self.summary["fail"] == 0

    def merge(self, other: "VerificationReport") -> None:
        for c in other.checks:
            self.add(c)

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "degree_cutoff": self.degree_cutoff,
            "runtime_ms": self.runtime_ms,
            "summary": self.summary,
            "checks": [
                {
                    "id": c.id,
                    "description": c.description,
                    "status": c.status,
                    "details": c.details,
                    "anchor": c.anchor,
                }
                for c in self.sorted_checks()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"degree cutoff: {self.degree_cutoff}",
            "",
        ]
        width = max((len(c.id) for c in self.checks), default=0)
        for c in self.sorted_checks():
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c.status]
            line = f"[{mark}] {c.id.ljust(width)}  {c.description}"
            if c.details:
                line += f"  -- {c.details}"
            if c.anchor:
                line += f"  ({c.anchor})"
            lines.append(line)
        s = self.summary
        lines.append("")
        lines.append(
            f"total: {len(self.checks)}  pass: {s['pass']}  "
            f"fail: {s['fail']}  skipped: {s['skipped']}"
        )
        if self.runtime_ms is not None:
            lines.append(f"runtime: {self.runtime_ms} ms")
        return "\n".join(lines)
