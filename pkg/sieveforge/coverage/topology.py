"""
Grothendieck topologies: axiom checking, the standard constructions and
the comparison order.
"""

import logging
from enum import Enum
from typing import Any

from sieveforge.category.carrier import Carrier
from sieveforge.category.sieves import Sieve
from sieveforge.core.exceptions import NotAFrame, NotATopology
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment, assignment_from
from sieveforge.order.lattice import FiniteLattice, is_frame, join_of

logger = logging.getLogger(__name__)


class TopologyKind(Enum):
    """Named topologies on a finite lattice."""

    TRIVIAL = "trivial"
    DISCRETE = "discrete"
    ATOMIC = "atomic"
    DENSE = "dense"


class Comparison(Enum):
    """Outcome of comparing two assignments pointwise."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _render(carrier: Carrier, sieve: Sieve) -> list[str]:
    return carrier.render(sieve)


def check_topology(assignment: CoverAssignment) -> Verdict:
    """
    Check maximality, stability and transitivity.

    Transitivity is checked by full expansion: for every covering S at C and
    every sieve R on C whose restriction along each h in S covers dom(h),
    R must cover C.

    Args:
        assignment: Assignment to check

    Returns:
        Verdict labelled ``maximality``, ``stability`` or ``transitivity``
    """
    carrier = assignment.carrier
    for obj in carrier.objects:
        top = carrier.maximal(obj)
        if top not in assignment[obj]:
            return Verdict.fail("maximality", object=obj, sieve=_render(carrier, top))

    for obj in carrier.objects:
        for sieve in assignment.sieves(obj):
            for arrow, pulled in carrier.restrictions(sieve):
                if pulled not in assignment[pulled.owner]:
                    return Verdict.fail(
                        "stability",
                        object=obj,
                        sieve=_render(carrier, sieve),
                        morphism=arrow,
                        pullback=_render(carrier, pulled),
                        target=pulled.owner,
                    )

    for obj in carrier.objects:
        covering = assignment.sieves(obj)
        for candidate in carrier.sieves_on(obj):
            if candidate in assignment[obj]:
                continue
            for sieve in covering:
                if all(
                    carrier.pullback(arrow, candidate) in assignment[carrier.arrow_domain(arrow)]
                    for arrow in carrier.ordered(sieve.members)
                ):
                    return Verdict.fail(
                        "transitivity",
                        object=obj,
                        sieve=_render(carrier, sieve),
                        candidate=_render(carrier, candidate),
                    )
    return Verdict.ok()


def _is_dense(carrier: Carrier, sieve: Sieve) -> bool:
    # every arrow into the owner has a restriction that meets the sieve
    return all(
        not carrier.pullback(arrow, sieve).is_empty
        for arrow in carrier.arrows_into(sieve.owner)
    )


def standard_assignment(kind: TopologyKind | str, structure: Any) -> CoverAssignment:
    """
    The named assignment on a lattice (or category), without certification.

    On a category ``atomic`` and ``dense`` read as "nonempty" and "every
    arrow into C restricts to a nonempty sieve"; such assignments need not
    be topologies.
    """
    kind = TopologyKind(kind)
    rules = {
        TopologyKind.TRIVIAL: lambda c, obj: [c.maximal(obj)],
        TopologyKind.DISCRETE: lambda c, obj: c.sieves_on(obj),
        TopologyKind.ATOMIC: lambda c, obj: [s for s in c.sieves_on(obj) if not s.is_empty],
        TopologyKind.DENSE: lambda c, obj: [s for s in c.sieves_on(obj) if _is_dense(c, s)],
    }
    assignment = assignment_from(structure, rules[kind], name=f"J_{kind.value}")
    logger.debug(f"Built {assignment.name} on {assignment.carrier.name}")
    return assignment


def standard_topology(kind: TopologyKind | str, lattice: FiniteLattice) -> CoverAssignment:
    """
    The trivial, discrete, atomic or dense topology on a finite lattice.

    Args:
        kind: Which topology
        lattice: Bounded finite lattice (always downward directed)

    Returns:
        Certified topology

    Raises:
        ValueError: If kind is not a known topology name
        NotATopology: If certification fails
    """
    return require_topology(standard_assignment(kind, lattice))


def sup_topology(lattice: FiniteLattice) -> CoverAssignment:
    """
    Sieves cover c exactly when their join is c.

    The empty sieve covers the bottom element, since the empty join is
    bottom.

    Raises:
        NotAFrame: If the lattice is not distributive
    """
    verdict = is_frame(lattice)
    if not verdict.passed:
        raise NotAFrame(
            f"{lattice.name} is not a frame", witness=verdict.witness.to_dict()
        )
    return assignment_from(
        lattice,
        lambda c, obj: [s for s in c.sieves_on(obj) if join_of(lattice, s.members) == obj],
        name="K_sup",
    )


def compare_assignments(first: CoverAssignment, second: CoverAssignment) -> Comparison:
    """
    Classify two assignments under pointwise inclusion.

    Raises:
        CarrierMismatch: If the carriers differ
    """
    first.same_carrier(second)
    below = all(first[obj] <= second[obj] for obj in first.objects)
    above = all(first[obj] >= second[obj] for obj in first.objects)
    if below and above:
        return Comparison.EQUAL
    if below:
        return Comparison.LESS
    if above:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def topology_is_filter(topology: CoverAssignment) -> Verdict:
    """
    Decide whether a topology is a filter.

    A topology is a filter iff covering sieves pairwise meet and the empty
    sieve covers nothing.

    Raises:
        NotATopology: If the assignment is not a topology
    """
    require_topology(topology)
    carrier = topology.carrier
    for obj in carrier.objects:
        sieves = topology.sieves(obj)
        for sieve in sieves:
            if sieve.is_empty:
                return Verdict.fail("empty-sieve", object=obj)
        for i, first in enumerate(sieves):
            for second in sieves[i + 1 :]:
                if not first.meets(second):
                    return Verdict.fail(
                        "disjoint-pair",
                        object=obj,
                        sieves=[_render(carrier, first), _render(carrier, second)],
                    )
    return Verdict.ok()


def require_topology(assignment: CoverAssignment) -> CoverAssignment:
    """Return the assignment or raise NotATopology."""
    verdict = check_topology(assignment)
    if not verdict.passed:
        raise NotATopology(
            f"{assignment.name or 'assignment'} is not a topology",
            witness=verdict.witness.to_dict(),
        )
    return assignment
