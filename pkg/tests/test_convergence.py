"""
Tests for points, neighborhoods, convergence and compactness.
"""

import pytest

from sieveforge.category import CatPoint, Sieve
from sieveforge.convergence import (
    CompactnessMethod,
    check_point,
    closure,
    cluster_points,
    compactness_report,
    converges,
    g_neighborhoods,
    is_frame_homomorphism,
    limit_points,
    locale_points,
    neighborhood_system,
    points_of,
    resolve_point,
    sup_converges,
    tychonoff_check,
)
from sieveforge.core.exceptions import (
    NotAFrame,
    NotCompactInput,
    OwnerMismatch,
    PointMismatch,
    ValidationError,
)
from sieveforge.coverage import standard_assignment
from sieveforge.filters import enumerate_ultrafilters
from sieveforge.laws import corpus

X = frozenset({"x", "a"})
XY = frozenset({"x", "y", "a", "b"})
TC = frozenset({"id_C", "x", "y", "a", "b"})


@pytest.fixture
def ultrafilter(twopt):
    """The unique ultrafilter on TWOPT."""
    return enumerate_ultrafilters(twopt)[0]


def labels(points):
    return [p.label for p in points]


class TestLocalePoints:
    """Test frame homomorphisms to 2."""

    def test_d12_points(self, d12):
        """Test D12 has the points ↑2, ↑3 and ↑4."""
        points = {p.generator: p for p in locale_points(d12)}
        assert set(points) == {"2", "3", "4"}
        assert points["2"].kernel == frozenset({"1", "3"})
        assert points["4"].kernel == frozenset({"1", "2", "3", "6"})
        assert points["3"].evaluate("6") == 1
        assert points["3"].evaluate("4") == 0

    def test_fixture_point(self):
        """Test the UP2 block resolves to ↑2."""
        point = corpus.fixture("UP2")
        assert point.generator == "2"
        assert point.to_dict()["dual_kernel"] == ["2", "4", "6", "12"]

    def test_not_a_frame(self, m3):
        """Test points need a distributive lattice."""
        with pytest.raises(NotAFrame):
            locale_points(m3)

    def test_frame_homomorphism(self, square):
        """Test the 0/1 valuation checker."""
        assert is_frame_homomorphism(square, {"⊥": 0, "a": 1, "b": 0, "⊤": 1}).passed
        assert is_frame_homomorphism(square, {"⊥": 0, "a": 1}).axiom == "total"
        assert is_frame_homomorphism(square, {"⊥": 1, "a": 1, "b": 1, "⊤": 1}).axiom == "bottom"
        assert is_frame_homomorphism(square, {"⊥": 0, "a": 0, "b": 0, "⊤": 1}).axiom == "join"


class TestPointsOf:
    """Test points relevant at an object."""

    def test_category_points(self, j1):
        """Test points of C and of the terminal object."""
        assert labels(points_of(j1, "C")) == ["x", "y"]
        assert labels(points_of(j1, "1")) == ["id_1"]

    def test_locale_points_by_kernel(self):
        """Test locale points are those whose kernel holds the element."""
        site = corpus.site("D12_TRIVIAL")
        assert set(labels(points_of(site, "3"))) == {"2", "4"}
        assert labels(points_of(site, "12")) == []

    def test_point_checks(self, j1):
        """Test points must belong to the object."""
        point = resolve_point(j1, "C", "x")
        assert point == CatPoint("x", "1", "C")
        with pytest.raises(PointMismatch):
            check_point(j1, "1", point)
        with pytest.raises(PointMismatch):
            resolve_point(j1, "C", "z")

    def test_locale_point_outside_kernel(self):
        """Test ↑3 is not a point of the element 3."""
        site = corpus.site("D12_TRIVIAL")
        up3 = next(p for p in locale_points(site.carrier.structure) if p.generator == "3")
        with pytest.raises(PointMismatch):
            check_point(site, "3", up3)


class TestNeighborhoods:
    """Test G-neighborhoods and cover-neighborhood systems."""

    def test_trivial_site(self, j1):
        """Test the only neighborhood under J1 is the maximal sieve."""
        point = resolve_point(j1, "C", "x")
        system = neighborhood_system(j1, "C", point)
        assert [s.members for s in system.g_nbhds] == [TC]
        assert [s.members for s in system.cover_nbhds] == [TC]
        assert not system.blind
        assert system.filtered.passed

    def test_factorization(self, j3):
        """Test x factors through {x a} but not through {y b}."""
        point = resolve_point(j3, "C", "x")
        assert [s.members for s in g_neighborhoods(j3, "C", point)] == [X, TC]
        system = neighborhood_system(j3, "C", point)
        assert [s.members for s in system.cover_nbhds] == [X, XY, TC]
        assert system.to_dict()["g_neighborhoods"] == [["x", "a"], ["id_C", "x", "y", "a", "b"]]

    def test_locale_neighborhoods(self):
        """Test locale neighborhoods are the covers inside the kernel."""
        site = corpus.site("D12_TRIVIAL")
        up2 = next(p for p in points_of(site, "3") if p.generator == "2")
        assert g_neighborhoods(site, "3", up2) == [Sieve("3", frozenset({"1", "3"}))]

    def test_locale_empty_cover_is_a_neighborhood(self, chain3):
        """Test the discrete site keeps ∅ and the system is not filtered."""
        site = standard_assignment("discrete", chain3)
        up1 = next(p for p in points_of(site, "0") if p.generator == "1")
        nbhds = g_neighborhoods(site, "0", up1)

        assert set(nbhds) == set(site["0"])
        assert Sieve("0", frozenset()) in nbhds
        system = neighborhood_system(site, "0", up1)
        assert not system.filtered.passed
        assert system.filtered.axiom == "empty-sieve"


class TestConvergence:
    """Test convergence, closure, cluster and limit points."""

    def test_trivial_site_converges_everywhere(self, j1, ultrafilter):
        """Test every filter converges to both points under J1."""
        assert labels(limit_points(ultrafilter, "C", j1)) == ["x", "y"]
        assert labels(limit_points(j1, "C", j1)) == ["x", "y"]

    def test_cluster_without_limit(self, j3, ultrafilter):
        """Test the ultrafilter clusters at both points but converges to neither."""
        assert labels(cluster_points(ultrafilter, "C", j3)) == ["x", "y"]
        assert limit_points(ultrafilter, "C", j3) == []
        point = resolve_point(j3, "C", "x")
        assert not converges(ultrafilter, "C", point, j3)

    def test_closure(self, j3):
        """Test closure of {x a} under J3."""
        assert labels(closure(j3, "C", Sieve("C", X))) == ["x"]
        assert closure(j3, "C", Sieve("C", frozenset())) == []
        with pytest.raises(OwnerMismatch):
            closure(j3, "C", Sieve("1", frozenset({"id_1", "t"})))

    def test_sup_convergence(self, d12, m3):
        """Test the join criterion."""
        trivial = standard_assignment("trivial", d12)
        dense = standard_assignment("dense", d12)
        assert sup_converges(d12, trivial, "12")
        assert not sup_converges(d12, dense, "12")
        with pytest.raises(NotAFrame):
            sup_converges(m3, standard_assignment("trivial", m3), "⊤")


class TestCompactness:
    """Test quasi-compactness, Hausdorffness and the Tychonoff check."""

    def test_twopt(self, j1):
        """Test C is quasi-compact but not Hausdorff under J1."""
        report = compactness_report(j1, "C")
        assert report.quasi_compact
        assert not report.hausdorff
        assert not report.compact
        assert report.witnesses["two_limit_filter"]["points"] == ["x", "y"]
        assert compactness_report(j1, "1").compact

    @pytest.mark.parametrize("site", ["D12_TRIVIAL", "D12_DENSE"])
    def test_d12_compact_elements(self, site):
        """Test 4 and 6 are the compact elements of D12."""
        topology = corpus.site(site)
        compact = [k for k in topology.objects if compactness_report(topology, k).compact]
        assert compact == ["4", "6"]

    def test_chain_compact_elements(self):
        """Test only 1 is compact in CHAIN3."""
        site = corpus.site("CHAIN3_TRIVIAL")
        compact = [k for k in site.objects if compactness_report(site, k).compact]
        assert compact == ["1"]

    def test_no_points_is_not_quasi_compact(self):
        """Test an element without points has a clusterless ultrafilter."""
        report = compactness_report(corpus.site("D12_TRIVIAL"), "12")
        assert not report.quasi_compact
        assert "clusterless_ultrafilter" in report.witnesses

    def test_exhaustive_method(self):
        """Test the exhaustive method on a compact element."""
        report = compactness_report(corpus.site("D12_TRIVIAL"), "4", "exhaustive")
        assert report.method is CompactnessMethod.EXHAUSTIVE
        assert report.compact
        assert report.to_dict()["points"] == ["3"]

    def test_tychonoff_fails_on_d12(self):
        """Test the meet 2 of the compact elements 4 and 6 is not compact."""
        verdict = tychonoff_check(corpus.site("D12_TRIVIAL"), ["4", "6"])
        assert verdict.axiom == "tychonoff"
        assert verdict.witness.data["meet"] == "2"

    def test_tychonoff_single_target(self):
        """Test a single compact target is its own meet."""
        assert tychonoff_check(corpus.site("D12_TRIVIAL"), ["4"]).passed

    def test_tychonoff_inputs(self, j1):
        """Test non-compact targets, empty targets and category sites."""
        site = corpus.site("D12_TRIVIAL")
        with pytest.raises(NotCompactInput):
            tychonoff_check(site, ["12"])
        with pytest.raises(ValidationError):
            tychonoff_check(site, [])
        with pytest.raises(ValidationError):
            tychonoff_check(j1, ["C"])
