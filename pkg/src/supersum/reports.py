"""Verification reports shared by scans, suites and the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of a scan: counts plus every counterexample, rendered exactly.

    ``findings`` holds informational entries that do not affect the status
    (for example counterexamples to a literal reading that the scan itself
    does not claim).
    """

    suite: str
    params: dict = field(default_factory=dict)
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def record(self, ok: bool, example: Any = None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(example)

    def merge(self, other: "VerificationReport"):
        self.passed += other.passed
        self.failed += other.failed
        self.counterexamples.extend(other.counterexamples)
        self.findings.extend(other.findings)

    def to_dict(self, include_time: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
            "findings": self.findings,
        }
        if include_time and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_time: bool = False) -> str:
        return json.dumps(self.to_dict(include_time), indent=2, sort_keys=True, default=str)

    def to_text(self, include_time: bool = False) -> str:
        lines = [f"suite {self.suite}: {self.status.upper()} ({self.passed} passed, {self.failed} failed)"]
        for k, v in sorted(self.params.items()):
            lines.append(f"  {k} = {v}")
        for ex in self.counterexamples:
            lines.append(f"  counterexample: {ex}")
        for f in self.findings:
            lines.append(f"  finding: {f}")
        if include_time and self.wall_time is not None:
            lines.append(f"  wall time: {self.wall_time:.3f} s")
        return "\n".join(lines)
