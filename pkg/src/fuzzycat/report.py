"""Validation reports: named checks with pass/fail status and witnesses."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None
    exhaustive: bool = True
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "exhaustive": self.exhaustive,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ValidationReport:
    """Ordered collection of checks about one subject.

    A failing check must carry a witness; ``add`` refuses otherwise.
    """

    subject: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float | None = None

    def add(self, name, passed, witness=None, *, exhaustive=True, note=""):
        passed = bool(passed)
        if not passed and witness is None:
            raise ValueError(f"failing check {name!r} needs a witness")
        check = Check(name, passed, None if passed else witness, exhaustive, note)
        self.checks.append(check)
        return check

    def extend(self, other: ValidationReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.name, c.passed, c.witness, c.exhaustive, c.note)
            )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exhaustive(self) -> bool:
        return all(c.exhaustive for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "exhaustive": self.exhaustive,
            "elapsed": self.elapsed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            mode = "" if c.exhaustive else " (sampled)"
            line = f"  {c.name}: {status}{mode}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)


class timed:
    """Context manager that stamps ``report.elapsed`` on exit."""

    def __init__(self, report: ValidationReport):
        self.report = report

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self._t0
        return False
