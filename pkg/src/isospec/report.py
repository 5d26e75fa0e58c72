"""Check records shared by the verifiers and the CLI."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable

from .numtheory import FactoringEffortExceeded


class Status(str, enum.Enum):
    VERIFIED = "VERIFIED"
    FALSIFIED = "FALSIFIED"
    UNVERIFIED = "UNVERIFIED"


@dataclass
class Check:
    name: str
    status: Status
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is Status.VERIFIED

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status.value, "details": self.details}


def run_check(name: str, fn: Callable[[], tuple[bool, dict]]) -> Check:
    """Run fn() -> (holds, details); effort exhaustion becomes UNVERIFIED."""
    try:
        holds, details = fn()
    except FactoringEffortExceeded as exc:
        return Check(name, Status.UNVERIFIED, {"reason": str(exc), "effort": exc.effort})
    return Check(name, Status.VERIFIED if holds else Status.FALSIFIED, details)


def overall(checks: list[Check]) -> Status:
    if any(c.status is Status.FALSIFIED for c in checks):
        return Status.FALSIFIED
    if any(c.status is Status.UNVERIFIED for c in checks):
        return Status.UNVERIFIED
    return Status.VERIFIED
