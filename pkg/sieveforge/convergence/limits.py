"""
Convergence, closure, cluster points and limit points.
"""

from sieveforge.category.sieves import Sieve
from sieveforge.convergence.neighborhoods import neighborhood_system
from sieveforge.convergence.points import Point, points_of
from sieveforge.core.exceptions import NotAFrame, OwnerMismatch
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.filters.axioms import FilterCertificate, as_assignment
from sieveforge.filters.generation import filter_from_basis
from sieveforge.order.lattice import FiniteLattice, is_frame, join_of

FilterLike = CoverAssignment | FilterCertificate


def converges(value: FilterLike, obj: str, point: Point, site: CoverAssignment) -> bool:
    """
    F(obj) converges to p iff every cover-neighborhood of p lies in F(obj).

    Raises:
        PointMismatch: If the point does not belong to obj
    """
    table = as_assignment(value)[obj]
    return all(n in table for n in neighborhood_system(site, obj, point).cover_nbhds)


def sup_converges(lattice: FiniteLattice, value: FilterLike, element: str) -> bool:
    """
    Join criterion: F(c) converges to c iff every S in F(c) has join c.

    Raises:
        NotAFrame: If the lattice is not distributive
        UnknownElement: If c is not an element
    """
    verdict = is_frame(lattice)
    if not verdict.passed:
        raise NotAFrame(f"{lattice.name} is not a frame", witness=verdict.witness.to_dict())
    lattice.position(element)
    return all(
        join_of(lattice, sieve.members) == element
        for sieve in as_assignment(value)[element]
    )


def closure(site: CoverAssignment, obj: str, sieve: Sieve) -> list[Point]:
    """
    Points of obj all of whose cover-neighborhoods meet the sieve.

    Raises:
        OwnerMismatch: If the sieve is not on obj
    """
    if sieve.owner != obj:
        raise OwnerMismatch(f"Sieve owned by {sieve.owner}, expected {obj}")
    return [
        p
        for p in points_of(site, obj)
        if all(n.meets(sieve) for n in neighborhood_system(site, obj, p).cover_nbhds)
    ]


def cluster_points(value: FilterLike, obj: str, site: CoverAssignment) -> list[Point]:
    """Points in the closure of every sieve of F(obj)."""
    sieves = as_assignment(value).sieves(obj)
    closures = [closure(site, obj, s) for s in sieves]
    return [p for p in points_of(site, obj) if all(p in c for c in closures)]


def limit_points(value: FilterLike, obj: str, site: CoverAssignment) -> list[Point]:
    """Points of obj to which F(obj) converges."""
    return [p for p in points_of(site, obj) if converges(value, obj, p, site)]


def basis_cluster_points(basis: FilterLike, obj: str, site: CoverAssignment) -> list[Point]:
    """Cluster points of the filter generated by a basis."""
    return cluster_points(filter_from_basis(basis), obj, site)


def basis_converges(basis: FilterLike, obj: str, point: Point, site: CoverAssignment) -> bool:
    """Convergence of the filter generated by a basis."""
    return converges(filter_from_basis(basis), obj, point, site)
