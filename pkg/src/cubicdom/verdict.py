from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str = ""
    witness: dict = field(default_factory=dict)

    @classmethod
    def holds(cls, reason: str = "", **witness) -> "Verdict":
        return cls(Status.HOLDS, reason, witness)

    @classmethod
    def violated(cls, reason: str, **witness) -> "Verdict":
        return cls(Status.VIOLATED, reason, witness)

    @classmethod
    def not_applicable(cls, reason: str, **witness) -> "Verdict":
        return cls(Status.NOT_APPLICABLE, reason, witness)

    @property
    def ok(self) -> bool:
        return self.status is not Status.VIOLATED

    def to_json(self) -> dict:
        return {"status": self.status.value, "reason": self.reason, "witness": self.witness}


class PreconditionError(ValueError):
    """An operation was called on inputs outside its contract."""
