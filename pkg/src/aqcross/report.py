"""Check records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def render(value: Any) -> Any:
    """JSON-safe rendering; exact numbers become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: Any = None
    computed: Any = None
    detail: str = ""

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "expected": render(self.expected),
            "computed": render(self.computed),
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def equal(name: str, expected: Any, computed: Any, detail: str = "") -> Check:
    return Check(name, expected == computed, expected, computed, detail)


@dataclass
class Report:
    command: list[str]
    params: dict
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": render(self.params),
            "ok": self.ok,
            "passed": sum(c.passed for c in self.checks),
            "failed": len(self.failures()),
            "checks": [c.as_dict() for c in self.checks],
            "wall_time_s": round(self.seconds, 3),
        }
