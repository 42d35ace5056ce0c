"""
Command reports.

A report echoes the command, lists one entry per verdict and optionally
carries a law-suite summary. Every failing entry names the command that
replays it.
"""

import json
import shlex
from dataclasses import dataclass, field
from typing import Any

from sieveforge.core.verdict import Verdict


def replay_command(argv: list[str]) -> str:
    """Shell-quoted command line that reruns ``argv``."""
    return " ".join(shlex.quote(part) for part in ["sieveforge", *argv])


@dataclass
class ReportEntry:
    """One verdict with its data."""

    label: str
    verdict: Verdict
    replay: str | None = None
    data: dict[str, Any] = field(default_factory=dict)
    strict: bool = True

    def __post_init__(self):
        if not self.verdict.passed and not self.replay:
            raise ValueError(f"failing entry {self.label!r} needs a replay command")

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"label": self.label, **self.verdict.to_dict()}
        if not self.strict:
            result["strict"] = False
        if self.replay and not self.verdict.passed:
            result["replay"] = self.replay
        if self.data:
            result["data"] = self.data
        return result


@dataclass
class Report:
    """Machine-readable outcome of one command."""

    command: list[str]
    entries: list[ReportEntry] = field(default_factory=list)
    summary: dict[str, Any] | None = None
    timing: float | None = None

    def add(
        self,
        label: str,
        verdict: Verdict,
        data: dict[str, Any] | None = None,
        replay: str | None = None,
        strict: bool = True,
    ) -> ReportEntry:
        entry = ReportEntry(
            label,
            verdict,
            replay or replay_command(self.command),
            data or {},
            strict,
        )
        self.entries.append(entry)
        return entry

    @property
    def passed(self) -> bool:
        return all(e.verdict.passed for e in self.entries if e.strict)

    @property
    def exit_code(self) -> int:
        """0 when every strict entry passed, 1 otherwise."""
        return 0 if self.passed else 1

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "command": replay_command(self.command),
            "status": "pass" if self.passed else "fail",
            "entries": [e.to_dict() for e in self.entries],
        }
        if self.summary is not None:
            result["summary"] = self.summary
        if self.timing is not None:
            result["timing_seconds"] = round(self.timing, 6)
        return result

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"$ {replay_command(self.command)}"]
        for entry in self.entries:
            status = entry.verdict.status.value.upper()
            suffix = "" if entry.strict else " (non-strict)"
            lines.append(f"{status:4} {entry.label}{suffix}")
            for key, value in entry.data.items():
                lines.append(f"     {key}: {json.dumps(value, ensure_ascii=False)}")
            if entry.verdict.witness is not None:
                witness = json.dumps(entry.verdict.witness.to_dict(), ensure_ascii=False)
                lines.append(f"     witness: {witness}")
                lines.append(f"     replay: {entry.replay}")
        if self.summary is not None:
            lines.append("summary:")
            for key, value in self.summary.items():
                lines.append(f"  {key}: {json.dumps(value, ensure_ascii=False)}")
        if self.timing is not None:
            lines.append(f"timing: {self.timing:.3f}s")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)

    def render(self, fmt: str = "json", indent: int = 2) -> str:
        return self.to_json(indent) if fmt == "json" else self.to_text()
