"""
Law run model and status definitions.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Any

from sieveforge.core.verdict import Verdict


class LawStatus(Enum):
    """Status of a law run."""

    PENDING = "pending"
    RUNNING = "running"
    HELD = "held"
    FALSIFIED = "falsified"
    ERRORED = "errored"


@dataclass
class LawRun:
    """
    One execution of a registered law over its corpus.
    """

    law: str
    group: str
    strict: bool
    status: LawStatus = LawStatus.PENDING
    cases: int = 0
    skipped: int = 0
    verdict: Verdict | None = None
    started_at: float | None = None
    completed_at: float | None = None
    error_message: str | None = None
    error_details: str | None = None

    def mark_running(self) -> None:
        """Mark run as started and record the start time."""
        self.status = LawStatus.RUNNING
        self.started_at = time.perf_counter()

    def mark_finished(self, verdict: Verdict, cases: int, skipped: int = 0) -> None:
        """
        Record the verdict of a completed run.

        Args:
            verdict: Pass means the law held on every case
            cases: Number of instances drawn
            skipped: Instances drawn but not eligible
        """
        self.status = LawStatus.HELD if verdict.passed else LawStatus.FALSIFIED
        self.completed_at = time.perf_counter()
        self.verdict = verdict
        self.cases = cases
        self.skipped = skipped

    def mark_errored(self, error: str, details: str | None = None) -> None:
        """
        Record a run that raised instead of returning a verdict.

        Args:
            error: Error message
            details: Optional error details
        """
        self.status = LawStatus.ERRORED
        self.completed_at = time.perf_counter()
        self.error_message = error
        self.error_details = details

    @property
    def failed(self) -> bool:
        return self.status in (LawStatus.FALSIFIED, LawStatus.ERRORED)

    def get_duration_seconds(self) -> float | None:
        if self.started_at is not None and self.completed_at is not None:
            return self.completed_at - self.started_at
        return None

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        result: dict[str, Any] = {
            "law": self.law,
            "group": self.group,
            "strict": self.strict,
            "status": self.status.value,
            "cases": self.cases,
            "skipped": self.skipped,
        }
        if self.verdict is not None and self.verdict.witness is not None:
            result["witness"] = self.verdict.witness.to_dict()
        if self.error_message is not None:
            result["error_message"] = self.error_message
            result["error_details"] = self.error_details
        if include_timing:
            result["duration_seconds"] = self.get_duration_seconds()
        return result
