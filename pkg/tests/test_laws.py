"""
Tests for law runs, the tracker and the law registry.
"""

import numpy as np
import pytest

from sieveforge.core.exceptions import UnresolvedReference, ValidationError
from sieveforge.core.verdict import Verdict
from sieveforge.laws import (
    LAWS,
    Law,
    LawContext,
    LawOutcome,
    LawRun,
    LawStatus,
    LawTracker,
    random_lattice,
    random_lattices,
    run_law,
    run_laws,
    select_laws,
)
from sieveforge.order.lattice import is_frame


class TestLawRun:
    """Test law run lifecycle."""

    def test_run_creation(self):
        """Test creating a law run."""
        run = LawRun(law="twopt-points", group="category", strict=True)

        assert run.status == LawStatus.PENDING
        assert run.cases == 0
        assert run.get_duration_seconds() is None

    def test_run_lifecycle(self):
        """Test run status transitions."""
        run = LawRun(law="twopt-points", group="category", strict=True)

        run.mark_running()
        assert run.status == LawStatus.RUNNING
        assert run.started_at is not None

        run.mark_finished(Verdict.ok(), 4)
        assert run.status == LawStatus.HELD
        assert run.cases == 4
        assert not run.failed
        assert run.get_duration_seconds() >= 0

    def test_run_falsified(self):
        """Test a failing verdict falsifies the run."""
        run = LawRun(law="meet-glb", group="filters", strict=True)
        run.mark_running()
        run.mark_finished(Verdict.fail("glb", object="0"), 2)

        assert run.status == LawStatus.FALSIFIED
        assert run.failed
        assert run.to_dict()["witness"] == {"axiom": "glb", "object": "0"}

    def test_skipped_instances(self):
        """Test ineligible instances are counted and serialized."""
        run = LawRun(law="subtopology-filter", group="filters", strict=True)
        run.mark_running()
        run.mark_finished(Verdict.ok(), 5, skipped=5)

        assert run.status == LawStatus.HELD
        assert run.to_dict()["cases"] == 5
        assert run.to_dict()["skipped"] == 5

    def test_run_errored(self):
        """Test run error handling."""
        run = LawRun(law="meet-glb", group="filters", strict=False)
        run.mark_running()
        run.mark_errored("Search budget exhausted", "budget 10")

        assert run.status == LawStatus.ERRORED
        assert run.failed
        result = run.to_dict(include_timing=True)
        assert result["error_details"] == "budget 10"
        assert "duration_seconds" in result


class TestLawTracker:
    """Test law tracker."""

    def _run(self, law: str, group: str, strict: bool, verdict: Verdict) -> LawRun:
        run = LawRun(law=law, group=group, strict=strict)
        run.mark_running()
        run.mark_finished(verdict, 1)
        return run

    def test_register_and_get(self):
        """Test registering and looking up runs."""
        tracker = LawTracker()
        run = self._run("twopt-points", "category", True, Verdict.ok())
        tracker.register_run(run)

        assert tracker.get_run("twopt-points") is run
        assert tracker.get_run("missing") is None

    def test_statistics(self):
        """Test getting statistics."""
        tracker = LawTracker()
        tracker.register_run(self._run("a", "order", True, Verdict.ok()))
        tracker.register_run(self._run("b", "order", True, Verdict.fail("x")))
        tracker.register_run(self._run("c", "filters", False, Verdict.fail("y")))

        stats = tracker.get_statistics()
        assert stats["total_laws"] == 3
        assert stats["cases"] == 3
        assert stats["status_counts"]["held"] == 1
        assert stats["status_counts"]["falsified"] == 2
        assert stats["by_group"]["order"] == {"passed": 1, "failed": 1}
        assert stats["strict_failures"] == ["b"]

    def test_get_runs_by_status(self):
        """Test filtering runs by status."""
        tracker = LawTracker()
        tracker.register_run(self._run("a", "order", True, Verdict.ok()))
        tracker.register_run(self._run("b", "order", True, Verdict.fail("x")))

        held = tracker.get_runs_by_status(LawStatus.HELD)
        assert [run.law for run in held] == ["a"]


class TestRegistry:
    """Test law registration and selection."""

    def test_every_group_has_laws(self):
        """Test the registry covers each module."""
        groups = {law.group for law in LAWS.values()}
        assert {"order", "category", "coverage", "filters", "convergence", "functors", "model"} <= groups

    def test_select_laws(self):
        """Test selection keeps the requested order."""
        selected = select_laws(["squarefree-boolean", "twopt-points"])
        assert [law.name for law in selected] == ["squarefree-boolean", "twopt-points"]
        assert len(select_laws()) == len(LAWS)

    def test_unknown_law(self):
        """Test unknown names are rejected."""
        with pytest.raises(UnresolvedReference):
            select_laws(["no-such-law"])

    def test_non_strict_laws(self):
        """Test the laws whose failures are reported but not fatal."""
        assert not LAWS["compactness-methods"].strict
        assert not LAWS["locale-tychonoff"].strict
        assert not LAWS["locale-filtered-empty-cover"].strict
        assert LAWS["locale-degeneracy"].strict
        assert LAWS["meet-glb"].strict


@pytest.mark.slow
class TestRunLaws:
    """Test running laws against a small corpus."""

    @pytest.mark.parametrize(
        "name",
        ["twopt-points", "squarefree-boolean", "model-round-trip", "locale-points", "locale-degeneracy"],
    )
    def test_cheap_laws_hold(self, name, test_settings):
        """Test laws that hold on the small corpus."""
        context = LawContext(test_settings.laws)
        run = run_law(LAWS[name], context)
        assert run.status == LawStatus.HELD, run.to_dict()
        assert run.cases > 0

    def test_errors_become_errored_runs(self, test_settings):
        """Test library errors are recorded instead of raised."""

        def broken(ctx: LawContext) -> LawOutcome:
            raise ValidationError("broken law", details="always")

        law = Law("broken", "order", True, "never holds", broken)
        run = run_law(law, LawContext(test_settings.laws))
        assert run.status == LawStatus.ERRORED
        assert run.error_message == "broken law"

    def test_empty_cover_falsifies_filtered_systems(self, test_settings):
        """Test the discrete CHAIN3 site is reported as not filtered."""
        run = run_law(LAWS["locale-filtered-empty-cover"], LawContext(test_settings.laws))
        assert run.status == LawStatus.FALSIFIED
        assert run.verdict.axiom == "filtered"
        assert run.verdict.witness.data["site"] == "J_discrete"

    def test_pruning_counts_every_draw(self, test_settings):
        """Test prunings that are not topologies still count as cases."""
        run = run_law(LAWS["subtopology-filter"], LawContext(test_settings.laws))
        assert run.status == LawStatus.HELD, run.to_dict()
        assert run.cases == test_settings.laws.pruning_pairs
        assert 0 <= run.skipped <= run.cases

    def test_run_laws(self, test_settings):
        """Test the tracker collects one run per law."""
        tracker = run_laws(select_laws(["twopt-points", "squarefree-boolean"]), LawContext(test_settings.laws))
        assert [run.law for run in tracker.get_runs()] == ["twopt-points", "squarefree-boolean"]
        assert tracker.strict_failures() == []


class TestRandomCorpus:
    """Test the seeded random lattices."""

    def test_random_lattice_is_bounded(self):
        """Test a random lattice has e0 at the bottom."""
        lattice = random_lattice(np.random.default_rng(0), 5)
        assert 2 <= len(lattice.elements) <= 5
        assert all(lattice.le("e0", x) for x in lattice.elements)

    def test_random_locales_are_frames(self):
        """Test frames_only keeps distributive lattices."""
        locales = random_lattices(7, 3, 6, frames_only=True)
        assert len(locales) == 3
        assert all(is_frame(lattice).passed for lattice in locales)

    def test_seeded(self):
        """Test the same seed gives the same family."""
        first = [lattice.elements for lattice in random_lattices(3, 4, 6)]
        second = [lattice.elements for lattice in random_lattices(3, 4, 6)]
        assert first == second

    def test_context_generators(self, test_settings):
        """Test per-law generators depend only on seed and salt."""
        context = LawContext(test_settings.laws)
        assert context.rng(5).integers(1000) == LawContext(test_settings.laws).rng(5).integers(1000)
