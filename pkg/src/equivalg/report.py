"""Pass/fail reports shared by the verification routines and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class SearchUndetermined(RuntimeError):
    """A bounded search ran out of budget without a certificate either way."""


@dataclass
class Check:
    name: str
    passed: bool
    detail: Any = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": bool(self.passed)}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    """A named list of checks; ``ok`` when every check passed."""

    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        for c in other.checks:
            name = f"{prefix}/{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.passed, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "data": self.data,
        }
