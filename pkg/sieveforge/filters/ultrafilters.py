"""
Ultrafilters: decision, greedy extension and exhaustive enumeration.
"""

import logging
from typing import Any

from sieveforge.category.carrier import carrier_of
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.filters.axioms import CertifiedAs, FilterCertificate, certify_filter
from sieveforge.filters.generation import Generators, SaturationKernel

logger = logging.getLogger(__name__)


def is_ultrafilter(
    value: CoverAssignment | FilterCertificate, budget: int | None = None
) -> Verdict:
    """
    Decide maximality of a filter.

    Passes iff adding any sieve S not in F(C) at C saturates to the
    improper filter.

    Raises:
        NotAFilter: If the input is not a filter
    """
    assignment = certify_filter(value).assignment
    kernel = SaturationKernel(assignment.carrier, budget)
    generators = kernel.generators_of(assignment)
    for i, members in kernel.candidates():
        if generators[i] <= members:
            continue
        refined = kernel.refine(generators, i, members)
        if refined is not None:
            carrier = assignment.carrier
            return Verdict.fail(
                "maximality",
                object=kernel.objects[i],
                sieve=carrier.ordered(members),
            )
    return Verdict.ok()


def extend_to_ultrafilter(
    value: CoverAssignment | FilterCertificate, budget: int | None = None
) -> FilterCertificate:
    """
    Greedy extension to an ultrafilter finer than the input.

    Candidates (object, sieve) are visited in canonical order and kept
    whenever the saturation stays proper, until a full pass adds nothing.

    Raises:
        NotAFilter: If the input is not a filter
    """
    assignment = certify_filter(value).assignment
    kernel = SaturationKernel(assignment.carrier, budget)
    generators = kernel.generators_of(assignment)
    changed = True
    while changed:
        changed = False
        for i, members in kernel.candidates():
            if generators[i] <= members:
                continue
            refined = kernel.refine(generators, i, members)
            if refined is not None:
                generators = refined
                changed = True
    return FilterCertificate(
        kernel.assignment(generators, "ultrafilter"), CertifiedAs.ULTRAFILTER
    )


def enumerate_ultrafilters(structure: Any, budget: int | None = None) -> list[FilterCertificate]:
    """
    All ultrafilters on a carrier.

    Depth-first search over the candidate list, branching on inclusion and
    exclusion of each undecided sieve. A branch dies once an excluded sieve
    becomes a member; leaves are kept when no proper refinement remains.

    Args:
        structure: Category, lattice or carrier
        budget: Saturation budget (default from settings)

    Returns:
        Ultrafilters in search order (inclusion explored first)

    Raises:
        BudgetExceeded: If the search exceeds the budget
    """
    carrier = carrier_of(structure)
    kernel = SaturationKernel(carrier, budget)
    candidates = kernel.candidates()
    found: list[Generators] = []
    visited: set[tuple[Generators, int, frozenset[tuple[int, frozenset[str]]]]] = set()
    stack: list[tuple[Generators, int, frozenset[tuple[int, frozenset[str]]]]] = [
        (kernel.top(), 0, frozenset())
    ]
    while stack:
        node = stack.pop()
        if node in visited:
            continue
        visited.add(node)
        kernel.tick()
        generators, position, excluded = node
        if any(generators[i] <= members for i, members in excluded):
            continue
        if position == len(candidates):
            if generators not in found and kernel.is_maximal(generators):
                found.append(generators)
            continue
        i, members = candidates[position]
        if generators[i] <= members:
            stack.append((generators, position + 1, excluded))
            continue
        refined = kernel.refine(generators, i, members)
        if refined is None:
            stack.append((generators, position + 1, excluded))
            continue
        stack.append((generators, position + 1, excluded | {(i, members)}))
        stack.append((refined, position + 1, excluded))
    logger.debug(
        f"{carrier.name}: {len(found)} ultrafilters, {kernel.states} saturation states"
    )
    return [
        FilterCertificate(kernel.assignment(g, "ultrafilter"), CertifiedAs.ULTRAFILTER)
        for g in found
    ]


def _filter_order_key(generators: Generators, kernel: SaturationKernel) -> tuple:
    positions = tuple(
        tuple(sorted(kernel.carrier.arrow_position(m) for m in g)) for g in generators
    )
    return -sum(len(g) for g in generators), positions


def enumerate_filters(structure: Any, budget: int | None = None) -> list[FilterCertificate]:
    """
    Every filter on a carrier, coarsest first.

    Breadth-first closure of the trivial filter under single-sieve
    refinements; every filter is reached by adding its own generators.

    Raises:
        BudgetExceeded: If the number of filters or saturation states exceeds
            the budget
    """
    carrier = carrier_of(structure)
    kernel = SaturationKernel(carrier, budget)
    candidates = kernel.candidates()
    start = kernel.top()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for generators in frontier:
            for i, members in candidates:
                if generators[i] <= members:
                    continue
                refined = kernel.refine(generators, i, members)
                if refined is not None and refined not in seen:
                    seen.add(refined)
                    nxt.append(refined)
        frontier = nxt
    ordered = sorted(seen, key=lambda g: _filter_order_key(g, kernel))
    logger.debug(f"{carrier.name}: {len(ordered)} filters")
    return [
        FilterCertificate(kernel.assignment(g, "filter"), CertifiedAs.FILTER)
        for g in ordered
    ]
