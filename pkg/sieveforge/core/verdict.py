"""
Checker results.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class VerdictStatus(Enum):
    """Outcome of an axiom check."""

    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class Witness:
    """
    Structured counterexample attached to a failed verdict.

    ``data`` holds the objects, elements, sieves and morphisms involved,
    already rendered to JSON-ready values.
    """

    axiom: str
    data: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"axiom": self.axiom, **self.data}


@dataclass(frozen=True)
class Verdict:
    """Result of running an axiom checker."""

    status: VerdictStatus
    witness: Witness | None = None

    def __post_init__(self):
        if self.status is VerdictStatus.FAIL and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @classmethod
    def ok(cls) -> "Verdict":
        return cls(VerdictStatus.PASS)

    @classmethod
    def fail(cls, axiom: str, **data: Any) -> "Verdict":
        """
        Build a failing verdict.

        Args:
            axiom: Label of the violated axiom
            **data: Objects, sieves and morphisms involved

        Returns:
            Failing Verdict
        """
        return cls(VerdictStatus.FAIL, Witness(axiom, data))

    @property
    def passed(self) -> bool:
        return self.status is VerdictStatus.PASS

    @property
    def axiom(self) -> str | None:
        return self.witness.axiom if self.witness else None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "witness": self.witness.to_dict() if self.witness else None,
        }
