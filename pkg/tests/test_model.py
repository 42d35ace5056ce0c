"""
Tests for the model file format and command reports.
"""

import json

import pytest

from sieveforge.category import CatPoint
from sieveforge.core.exceptions import (
    ModelSyntaxError,
    SieveForgeError,
    UnresolvedReference,
    ValidationError,
)
from sieveforge.core.verdict import Verdict
from sieveforge.laws import corpus
from sieveforge.model import (
    BlockKind,
    Report,
    ReportEntry,
    assignment_document,
    category_document,
    lattice_document,
    load_model,
    parse_documents,
    parse_model,
    replay_command,
    serialize_document,
    serialize_model,
)

SMALL = """\
lattice L
  elements 0 1
  order 0 < 1
end
"""


class TestParse:
    """Test parsing and resolution."""

    def test_fixture_model(self):
        """Test every fixture block resolves."""
        model = corpus.fixture_model()
        assert model.names(BlockKind.LATTICE) == ["CHAIN3", "D12", "SQ", "M3"]
        assert model.get("D12").name == "D12"
        assert model.get("PX") == CatPoint("x", "1", "C")

    def test_comments_and_blank_lines(self):
        """Test comments and blank lines are ignored."""
        text = "# header\n\nlattice L  # two elements\n  elements 0 1\n\n  order 0 < 1\nend\n"
        model = parse_model(text)
        assert model.get("L").elements == ("0", "1")

    def test_load_model(self, model_path):
        """Test loading from disk."""
        model = load_model(model_path())
        assert "TWOPT" in model.names(BlockKind.CATEGORY)

    def test_unreadable_file(self, tmp_path):
        """Test a missing file raises the base error."""
        with pytest.raises(SieveForgeError):
            load_model(tmp_path / "missing.txt")

    def test_pick(self):
        """Test picking a block by kind."""
        model = corpus.fixture_model()
        assert model.pick((BlockKind.POINT,), "PX")[0] == "PX"
        with pytest.raises(UnresolvedReference):
            model.pick((BlockKind.FUNCTOR,))
        with pytest.raises(UnresolvedReference):
            model.pick((BlockKind.LATTICE,), "TWOPT")


class TestSyntaxErrors:
    """Test positions reported for malformed input."""

    def test_unknown_block(self):
        """Test an unknown block keyword."""
        with pytest.raises(ModelSyntaxError) as exc_info:
            parse_documents("widget W\nend\n")
        assert (exc_info.value.line, exc_info.value.column) == (1, 1)

    def test_unknown_body_keyword(self):
        """Test an unknown keyword inside a lattice block."""
        with pytest.raises(ModelSyntaxError) as exc_info:
            parse_documents("lattice L\n  elements 0 1\n  colour red\nend\n")
        assert exc_info.value.line == 3
        assert exc_info.value.column == 3

    def test_missing_end(self):
        """Test an unterminated block."""
        with pytest.raises(ModelSyntaxError) as exc_info:
            parse_documents("lattice L\n  elements 0\n")
        assert exc_info.value.line == 3
        assert "missing 'end'" in exc_info.value.message

    def test_bad_sieve_list(self):
        """Test stray text between sieves."""
        with pytest.raises(ModelSyntaxError):
            parse_documents("topology J on L\n  at 1 : {0 1} junk\nend\n")


class TestResolution:
    """Test structural errors found while resolving."""

    def test_duplicate_names(self):
        """Test block names are unique."""
        with pytest.raises(ValidationError):
            parse_model(SMALL + SMALL)

    def test_dangling_reference(self):
        """Test references to undeclared blocks."""
        with pytest.raises(UnresolvedReference):
            parse_model("topology J on NOPE\n  standard trivial\nend\n")

    def test_sup_needs_lattice(self):
        """Test 'sup' on a category."""
        with pytest.raises(ValidationError):
            parse_model(corpus.FIXTURE_MODEL + "topology S on TWOPT\n  sup\nend\n")

    def test_point_off_terminal(self):
        """Test a categorical point must start at the terminal object."""
        with pytest.raises(ValidationError):
            parse_model(corpus.FIXTURE_MODEL + "point P on TWOPT\n  morphism t\nend\n")

    def test_non_prime_dual(self):
        """Test a locale point must be a prime filter."""
        with pytest.raises(ValidationError):
            parse_model(corpus.FIXTURE_MODEL + "point P on D12\n  dual 6 12\nend\n")


class TestSerialize:
    """Test writing models back to text."""

    def test_fixture_round_trip(self):
        """Test the fixture documents survive serialization."""
        documents = corpus.fixture_model().documents
        assert parse_documents(serialize_model(documents)) == documents

    def test_lattice_document(self, d12):
        """Test a lattice written from its covering pairs."""
        model = parse_model(serialize_document(lattice_document(d12, "E")))
        assert model.get("E").elements == d12.elements

    def test_category_document(self, twopt):
        """Test a category written without its identities."""
        doc = category_document(twopt, "T")
        assert ["t", "x", "id_1"] in doc.body["compose"]
        assert all("id_C" not in entry[:2] for entry in doc.body["compose"])
        model = parse_model(serialize_document(doc))
        assert model.get("T").composition == twopt.composition

    def test_assignment_document(self, j1):
        """Test an explicit table for a site."""
        doc = assignment_document(BlockKind.TOPOLOGY, "JX", j1, on="TWOPT")
        model = parse_model(corpus.FIXTURE_MODEL + "\n" + serialize_document(doc))
        assert model.get("JX").to_dict()["table"] == j1.to_dict()["table"]


class TestReports:
    """Test command reports."""

    def test_replay_command(self):
        """Test shell quoting of the replay line."""
        assert replay_command(["law", "--law", "a b"]) == "sieveforge law --law 'a b'"

    def test_entries_default_replay(self):
        """Test entries replay the report command by default."""
        report = Report(["check", "model.txt"])
        entry = report.add("frame", Verdict.fail("distributivity", element="p"))
        assert entry.replay == "sieveforge check model.txt"
        assert report.to_dict()["entries"][0]["replay"] == entry.replay

    def test_non_strict_entries(self):
        """Test non-strict failures do not change the exit code."""
        report = Report(["check", "model.txt"])
        report.add("lattice", Verdict.ok())
        report.add("frame", Verdict.fail("distributivity"), strict=False)
        assert report.exit_code == 0
        text = report.to_text()
        assert "(non-strict)" in text
        assert text.endswith("PASS")

    def test_strict_failure(self):
        """Test a strict failure fails the report."""
        report = Report(["filter", "model.txt"])
        report.add("filter", Verdict.fail("F4", object="0"), data={"object": "0"})
        assert report.exit_code == 1
        payload = json.loads(report.render("json"))
        assert payload["status"] == "fail"
        assert payload["entries"][0]["witness"] == {"axiom": "F4", "object": "0"}
        assert report.render("text").endswith("FAIL")

    def test_failing_entry_needs_replay(self):
        """Test a failing entry cannot be built without a replay."""
        with pytest.raises(ValueError):
            ReportEntry("x", Verdict.fail("F1"))

    def test_summary_and_timing(self):
        """Test optional summary and timing fields."""
        report = Report(["law"], summary={"passed": 3}, timing=0.1234567)
        payload = report.to_dict()
        assert payload["summary"] == {"passed": 3}
        assert payload["timing_seconds"] == 0.123457
