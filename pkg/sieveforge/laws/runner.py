"""
Law runner and tracker for law-suite results.
"""

import logging
from collections import OrderedDict
from collections.abc import Iterable
from typing import Any

from sieveforge.core.exceptions import SieveForgeError
from sieveforge.laws.registry import Law, LawContext
from sieveforge.laws.run import LawRun, LawStatus


class LawTracker:
    """
    Tracks the runs of one law-suite invocation.
    """

    def __init__(self):
        self._runs: dict[str, LawRun] = OrderedDict()
        self._logger = logging.getLogger(__name__)

    def register_run(self, run: LawRun) -> None:
        self._runs[run.law] = run
        self._logger.debug(f"Registered law run {run.law}")

    def get_run(self, law: str) -> LawRun | None:
        return self._runs.get(law)

    def get_runs(self) -> list[LawRun]:
        return list(self._runs.values())

    def get_runs_by_status(self, status: LawStatus) -> list[LawRun]:
        return [run for run in self._runs.values() if run.status == status]

    def strict_failures(self) -> list[LawRun]:
        """Failed runs of strict laws; these decide the exit status."""
        return [run for run in self._runs.values() if run.strict and run.failed]

    def get_statistics(self) -> dict[str, Any]:
        """
        Get law-suite statistics.

        Returns:
            Totals, status counts and pass/fail counts per group
        """
        status_counts = {
            status.value: len(self.get_runs_by_status(status)) for status in LawStatus
        }
        groups: dict[str, dict[str, int]] = {}
        for run in self._runs.values():
            counts = groups.setdefault(run.group, {"passed": 0, "failed": 0})
            counts["failed" if run.failed else "passed"] += 1
        return {
            "total_laws": len(self._runs),
            "cases": sum(run.cases for run in self._runs.values()),
            "status_counts": status_counts,
            "by_group": groups,
            "strict_failures": [run.law for run in self.strict_failures()],
        }


def run_law(law: Law, context: LawContext) -> LawRun:
    """
    Execute one law, converting library errors into an errored run.
    """
    logger = logging.getLogger(__name__)
    run = LawRun(law.name, law.group, law.strict)
    run.mark_running()
    try:
        outcome = law.check(context)
    except SieveForgeError as e:
        run.mark_errored(e.message, e.details)
        logger.warning(f"Law {law.name} raised {type(e).__name__}: {e}")
        return run
    run.mark_finished(outcome.verdict, outcome.cases, outcome.skipped)
    if outcome.verdict.passed:
        logger.info(f"Law {law.name} held on {outcome.cases} cases")
    else:
        logger.warning(f"Law {law.name} falsified: {outcome.verdict.axiom}")
    return run


def run_laws(laws: Iterable[Law], context: LawContext) -> LawTracker:
    """Run every law in order and collect the results."""
    tracker = LawTracker()
    for law in laws:
        tracker.register_run(run_law(law, context))
    return tracker
