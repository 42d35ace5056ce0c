"""
Tests for cover assignments and Grothendieck topologies.
"""

import pytest

from sieveforge.category import Sieve, carrier_of
from sieveforge.core.exceptions import (
    CarrierMismatch,
    NotAFrame,
    NotATopology,
    OwnerMismatch,
    ValidationError,
)
from sieveforge.coverage import (
    Comparison,
    TopologyKind,
    check_topology,
    compare_assignments,
    cover_assignment,
    require_topology,
    standard_assignment,
    standard_topology,
    sup_topology,
    topology_is_filter,
    upward_closure,
)
from sieveforge.laws import corpus


class TestCoverAssignment:
    """Test assignment construction and value semantics."""

    def test_missing_objects_are_empty(self, chain3):
        """Test objects absent from the table get no sieves."""
        assignment = cover_assignment(chain3, {"2": [["0", "1", "2"]]})
        assert assignment["0"] == frozenset()
        assert assignment.covers("2", Sieve("2", frozenset({"0", "1", "2"})))

    def test_invalid_sieve(self, twopt):
        """Test entries must be sieves on their object."""
        with pytest.raises(ValidationError):
            cover_assignment(twopt, {"C": [["x"]]})

    def test_owner_mismatch(self, twopt):
        """Test Sieve values must be listed under their owner."""
        with pytest.raises(OwnerMismatch):
            cover_assignment(twopt, {"1": [Sieve("C", frozenset({"x", "a"}))]})

    def test_equality_by_table(self, chain3):
        """Test independently built assignments compare by content."""
        first = standard_assignment("trivial", chain3)
        second = cover_assignment(chain3, {k: [chain3.below(k)] for k in chain3.elements})
        assert first == second
        assert hash(first) == hash(second)
        assert first != standard_assignment("discrete", chain3)

    def test_replace_and_to_dict(self, chain3):
        """Test replacing one table and rendering."""
        trivial = standard_assignment("trivial", chain3)
        carrier = carrier_of(chain3)
        changed = trivial.replace("0", carrier.sieves_on("0"))
        assert len(changed["0"]) == 2
        assert trivial.to_dict()["table"]["2"] == [["0", "1", "2"]]
        assert trivial.to_dict()["flavor"] == "locale"

    def test_upward_closure(self, chain3):
        """Test all sieves above a family."""
        carrier = carrier_of(chain3)
        closure = upward_closure(carrier, "2", [Sieve("2", frozenset({"0"}))])
        assert {len(s) for s in closure} == {1, 2, 3}


class TestTopologyAxioms:
    """Test the topology checker."""

    def test_trivial_twopt_site(self, j1):
        """Test J1 is a topology."""
        assert check_topology(j1).passed

    def test_unstable_sites(self):
        """Test J2 and J3 fail stability along y."""
        for name in ("J2", "J3"):
            verdict = check_topology(corpus.site(name))
            assert verdict.axiom == "stability"
            assert verdict.witness.data["morphism"] == "y"
            assert verdict.witness.data["pullback"] == []

    def test_maximality(self, chain3):
        """Test an assignment missing the maximal sieve."""
        assignment = cover_assignment(chain3, {"0": [["0"]], "1": [["0", "1"]]})
        verdict = check_topology(assignment)
        assert verdict.axiom == "maximality"
        assert verdict.witness.data["object"] == "2"

    def test_transitivity(self, chain3):
        """Test a stable assignment that is not transitive."""
        table = {
            "0": [[], ["0"]],
            "1": [["0", "1"], ["0"]],
            "2": [["0", "1", "2"]],
        }
        verdict = check_topology(cover_assignment(chain3, table))
        assert verdict.axiom == "transitivity"

    def test_require_topology(self, twopt):
        """Test the atomic rule on TWOPT is not a topology."""
        atomic = standard_assignment(TopologyKind.ATOMIC, twopt)
        with pytest.raises(NotATopology) as exc_info:
            require_topology(atomic)
        assert exc_info.value.witness["axiom"] == "stability"


class TestStandardTopologies:
    """Test the named topologies on lattices."""

    @pytest.mark.parametrize("kind", list(TopologyKind))
    @pytest.mark.parametrize("name", ["CHAIN3", "D12", "SQ", "M3"])
    def test_all_kinds_are_topologies(self, kind, name):
        """Test every named assignment certifies."""
        topology = standard_topology(kind, corpus.lattice(name))
        assert topology.name == f"J_{kind.value}"

    def test_unknown_kind(self, chain3):
        """Test unknown names are rejected."""
        with pytest.raises(ValueError):
            standard_topology("bogus", chain3)

    def test_dense_equals_atomic(self, d12):
        """Test dense and atomic coincide on a finite lattice."""
        dense = standard_topology("dense", d12)
        atomic = standard_topology("atomic", d12)
        assert compare_assignments(dense, atomic) is Comparison.EQUAL

    def test_sup_topology(self, d12):
        """Test the join topology covers the bottom by the empty sieve."""
        sup = sup_topology(d12)
        assert Sieve("1", frozenset()) in sup["1"]
        assert len(sup["12"]) == 3
        assert check_topology(sup).passed

    def test_sup_needs_frame(self, m3):
        """Test the join topology needs a distributive lattice."""
        with pytest.raises(NotAFrame):
            sup_topology(m3)


class TestComparison:
    """Test the comparison order."""

    def test_order(self, chain3):
        """Test trivial below dense below discrete."""
        trivial = standard_topology("trivial", chain3)
        dense = standard_topology("dense", chain3)
        discrete = standard_topology("discrete", chain3)
        assert compare_assignments(trivial, discrete) is Comparison.LESS
        assert compare_assignments(discrete, dense) is Comparison.GREATER
        assert compare_assignments(trivial, trivial) is Comparison.EQUAL

    def test_incomparable(self, chain3):
        """Test two assignments neither of which contains the other."""
        first = cover_assignment(chain3, {"0": [["0"]]})
        second = cover_assignment(chain3, {"1": [["0", "1"]]})
        assert compare_assignments(first, second) is Comparison.INCOMPARABLE

    def test_carrier_mismatch(self, chain3, square):
        """Test assignments on different carriers do not compare."""
        with pytest.raises(CarrierMismatch):
            compare_assignments(
                standard_assignment("trivial", chain3), standard_assignment("trivial", square)
            )


class TestTopologyIsFilter:
    """Test the filter criterion for topologies."""

    def test_trivial_is_filter(self, chain3, j1):
        """Test trivial topologies are filters."""
        assert topology_is_filter(standard_topology("trivial", chain3)).passed
        assert topology_is_filter(j1).passed

    def test_discrete_is_not(self, chain3):
        """Test a topology covering by the empty sieve is not a filter."""
        verdict = topology_is_filter(standard_topology("discrete", chain3))
        assert verdict.axiom == "empty-sieve"

    def test_needs_topology(self):
        """Test non-topologies are rejected."""
        with pytest.raises(NotATopology):
            topology_is_filter(corpus.site("J2"))
