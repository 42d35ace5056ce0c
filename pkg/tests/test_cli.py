"""
Tests for the command-line interface.
"""

import json

import pytest

from sieveforge.cli import build_parser, main, run_command
from sieveforge.core.exceptions import UnresolvedReference
from sieveforge.laws import corpus

SUBBASE = """
subbase S on TWOPT
  at C : {x a}
end
"""


class TestCheck:
    """Test the check command."""

    def test_lattice(self, model_path):
        """Test a lattice block passes."""
        report = run_command(["check", "lattice", model_path(), "--name", "D12"])
        assert report.exit_code == 0
        assert len(report.entries[0].data["elements"]) == 6
        assert report.entries[1].data == {"boolean": False}

    def test_non_frame_is_not_fatal(self, model_path):
        """Test the frame entry is reported without failing the command."""
        report = run_command(["check", "lattice", model_path(), "--name", "M3"])
        assert not report.entries[1].verdict.passed
        assert report.exit_code == 0

    def test_topology(self, model_path):
        """Test J1 passes and J2 fails stability."""
        report = run_command(["check", "topology", model_path(), "--name", "J1"])
        assert [e.label for e in report.entries] == ["topology", "topology-is-filter"]
        assert report.exit_code == 0

        report = run_command(["check", "topology", model_path(), "--name", "J2"])
        assert report.exit_code == 1
        assert report.entries[0].verdict.axiom == "stability"
        assert "--name J2" in report.entries[0].replay

    def test_subbase_saturation(self, model_path):
        """Test an improper saturation is reported with its trace."""
        path = model_path(corpus.FIXTURE_MODEL + SUBBASE)
        report = run_command(["check", "subbase", path])
        saturation = report.entries[1]
        assert saturation.label == "saturation"
        assert saturation.verdict.axiom == "improper"
        assert report.exit_code == 0

    def test_functor_between_sites(self, model_path):
        """Test SWAP fails to preserve the J2 covers."""
        argv = ["check", "functor", model_path(), "--name", "SWAP", "--site", "J2", "--target-site", "J2"]
        report = run_command(argv)
        labels = [e.label for e in report.entries]
        assert labels[:2] == ["functor", "filter-preserving"]
        assert report.exit_code == 1

    def test_functor_needs_both_sites(self, model_path, capsys):
        """Test a lone --site is a usage error instead of being ignored."""
        with pytest.raises(SystemExit) as exc_info:
            run_command(["check", "functor", model_path(), "--name", "SWAP", "--site", "J1"])
        assert exc_info.value.code == 2
        assert "--target-site" in capsys.readouterr().err

        with pytest.raises(SystemExit) as exc_info:
            run_command(["check", "topology", model_path(), "--name", "J1", "--site", "J1"])
        assert exc_info.value.code == 2

    def test_ambiguous_block(self, model_path):
        """Test the name is required when several blocks match."""
        with pytest.raises(UnresolvedReference):
            run_command(["check", "topology", model_path()])


class TestEnumerate:
    """Test the enumerate command."""

    def test_sieves(self, model_path):
        """Test sieves on one object."""
        report = run_command(["enumerate", "sieves", model_path(), "--name", "TWOPT", "--object", "C"])
        assert len(report.entries[0].data["C"]) == 5

    def test_ultrafilters(self, model_path):
        """Test CHAIN3 has one ultrafilter."""
        report = run_command(["enumerate", "ultrafilters", model_path(), "--name", "CHAIN3"])
        assert len(report.entries[0].data["ultrafilters"]) == 1

    def test_points(self, model_path):
        """Test categorical and locale points."""
        report = run_command(["enumerate", "points", model_path(), "--name", "TWOPT"])
        data = report.entries[0].data
        assert data["1"] == ["id_1"]
        assert data["C"] == ["x", "y"]

        report = run_command(["enumerate", "points", model_path(), "--name", "D12"])
        assert len(report.entries[0].data["points"]) == 3


class TestConvergenceCommands:
    """Test converge, closure, cluster, compact and tychonoff."""

    def test_converge(self, model_path):
        """Test the trivial filter converges to every point of C."""
        argv = ["converge", model_path(), "--site", "J1", "--filter", "J1", "--object", "C"]
        report = run_command(argv)
        assert [e.label for e in report.entries] == ["converges:x", "converges:y"]
        assert report.exit_code == 0

    def test_converge_to_point_block(self, model_path):
        """Test a point given by block name."""
        argv = ["converge", model_path(), "--site", "J1", "--filter", "J1", "--object", "C", "--point", "PX"]
        report = run_command(argv)
        assert [e.label for e in report.entries] == ["converges:x"]

    def test_closure(self, model_path):
        """Test closure of {x a} under J3."""
        argv = ["closure", model_path(), "--site", "J3", "--object", "C", "--sieve", "x,a"]
        report = run_command(argv)
        assert report.entries[0].data["points"] == ["x"]

    def test_cluster(self, model_path):
        """Test cluster and limit points under J1."""
        argv = ["cluster", model_path(), "--site", "J1", "--filter", "J1", "--object", "C"]
        data = run_command(argv).entries[0].data
        assert data["cluster_points"] == ["x", "y"]
        assert data["limit_points"] == ["x", "y"]

    def test_compact(self, model_path):
        """Test C is not compact under J1 but 1 is."""
        report = run_command(["compact", model_path(), "--site", "J1", "--object", "C"])
        assert report.exit_code == 1
        report = run_command(["compact", model_path(), "--site", "J1", "--object", "1"])
        assert report.exit_code == 0

    def test_tychonoff(self, model_path):
        """Test the meet of 4 and 6 in D12 is not compact."""
        argv = ["tychonoff", model_path(), "--site", "D12_TRIVIAL", "--targets", "4", "6"]
        report = run_command(argv)
        assert report.exit_code == 1
        assert report.entries[0].verdict.witness.data["meet"] == "2"


@pytest.mark.integration
class TestLaws:
    """Test the laws command."""

    def test_selected_laws(self):
        """Test running two laws on the fixture corpus."""
        argv = ["laws", "--corpus", "fixtures", "--law", "twopt-points", "--law", "squarefree-boolean"]
        report = run_command(argv)
        assert report.exit_code == 0
        assert report.summary["total_laws"] == 2
        assert [e.label for e in report.entries] == ["twopt-points", "squarefree-boolean"]

    def test_timing(self):
        """Test timing is only reported on request."""
        report = run_command(["laws", "--corpus", "fixtures", "--law", "twopt-points"])
        assert report.timing is None
        report = run_command(["laws", "--corpus", "fixtures", "--law", "twopt-points", "--timing"])
        assert report.timing is not None
        assert "duration_seconds" in report.entries[0].data

    def test_timing_from_config(self, tmp_path):
        """Test include_timing in the config file enables timing without the flag."""
        path = tmp_path / "config.yaml"
        path.write_text("report:\n  include_timing: true\n", encoding="utf-8")
        argv = ["laws", "--corpus", "fixtures", "--law", "twopt-points", "--config", str(path)]
        report = run_command(argv)
        assert report.timing is not None
        assert "duration_seconds" in report.entries[0].data

    def test_unknown_law(self):
        """Test unknown law names."""
        with pytest.raises(UnresolvedReference):
            run_command(["laws", "--law", "no-such-law"])


@pytest.mark.integration
class TestMain:
    """Test the entry point and its exit codes."""

    def test_json_output(self, model_path, capsys):
        """Test a passing command prints JSON and exits 0."""
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "lattice", model_path(), "--name", "CHAIN3"])
        assert exc_info.value.code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "pass"

    def test_text_output(self, model_path, capsys):
        """Test the text format."""
        with pytest.raises(SystemExit) as exc_info:
            main(["compact", model_path(), "--site", "J1", "--object", "C", "--format", "text"])
        assert exc_info.value.code == 1
        assert capsys.readouterr().out.strip().endswith("FAIL")

    def test_library_error(self, tmp_path, capsys):
        """Test unreadable models exit 2."""
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "lattice", str(tmp_path / "missing.txt")])
        assert exc_info.value.code == 2
        assert capsys.readouterr().err.startswith("Error:")

    def test_bad_budget_exits_2(self, model_path, capsys):
        """Test an out-of-range budget flag is a configuration error."""
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "lattice", model_path(), "--budget", "0"])
        assert exc_info.value.code == 2
        assert "override" in capsys.readouterr().err

    def test_usage_error(self):
        """Test argparse errors exit 2."""
        with pytest.raises(SystemExit) as exc_info:
            main(["bogus"])
        assert exc_info.value.code == 2

    def test_parser_commands(self):
        """Test every command parses its required arguments."""
        args = build_parser().parse_args(["closure", "m.txt", "--object", "C", "--sieve", "x a"])
        assert args.command == "closure"
        assert args.sieve == "x a"
