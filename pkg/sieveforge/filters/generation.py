"""
Generated filters: from bases, from subbases, meets and the filter order.

On a finite carrier every filter is principal at each object,
F(C) = {S : S ⊇ g(C)} with g(C) the intersection of F(C). The saturation
kernel works on these generator maps and only materializes full tables at
the end.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from functools import reduce
from typing import Any

from sieveforge.category.carrier import Carrier
from sieveforge.category.sieves import Sieve
from sieveforge.config.settings import get_settings
from sieveforge.core.exceptions import BudgetExceeded, ImproperFilter, ValidationError
from sieveforge.coverage.assignment import CoverAssignment, upward_closure
from sieveforge.filters.axioms import (
    CertifiedAs,
    FilterCertificate,
    as_assignment,
    certify_basis,
    certify_filter,
)

logger = logging.getLogger(__name__)

Generators = tuple[frozenset[str], ...]


class SaturationKernel:
    """
    Fixpoint propagation of generator maps.

    A generator map is closed when g(D) ⊆ h*(g(C)) for every arrow
    h: D -> C; closing a map shrinks generators until that holds and fails
    as soon as one becomes empty. Refinements are memoized per
    (state, object, sieve) and count against the saturation budget.
    """

    def __init__(self, carrier: Carrier, budget: int | None = None):
        self.carrier = carrier
        self.budget = get_settings().enumeration.budget if budget is None else budget
        self.states = 0
        self.objects = carrier.objects
        self._index = {obj: i for i, obj in enumerate(self.objects)}
        self._cache: dict[tuple[Generators, int, frozenset[str]], Generators | None] = {}
        # per codomain index: (arrow, domain index, [(g, arrow∘g)])
        self._into: list[list[tuple[str, int, list[tuple[str, str]]]]] = []
        for obj in self.objects:
            entries = []
            for arrow in carrier.arrows_into(obj):
                domain = carrier.arrow_domain(arrow)
                pairs = [
                    (g, carrier.compose_into(arrow, g))
                    for g in carrier.arrows_into(domain)
                ]
                entries.append((arrow, self._index[domain], pairs))
            self._into.append(entries)
        self._logger = logging.getLogger(__name__)

    def index(self, obj: str) -> int:
        return self._index[self.carrier.check_object(obj)]

    def tick(self) -> None:
        self.states += 1
        if self.states > self.budget:
            raise BudgetExceeded(
                f"Saturation budget of {self.budget} states exhausted",
                details=f"carrier {self.carrier.name}",
            )

    def top(self) -> Generators:
        """Generators of the trivial filter."""
        return tuple(self.carrier.maximal(obj).members for obj in self.objects)

    def propagate(
        self,
        generators: Sequence[frozenset[str]],
        pending: Iterable[int] | None = None,
        trace: list[dict[str, Any]] | None = None,
    ) -> Generators | None:
        """
        Close a generator map under pullback stability.

        Args:
            generators: Generator per object index
            pending: Object indices whose generator changed (default all)
            trace: Optional list receiving every shrinking step

        Returns:
            Closed generators, or None when some generator becomes empty
        """
        self.tick()
        gens = list(generators)
        queue = deque(range(len(gens)) if pending is None else pending)
        queued = set(queue)
        while queue:
            c = queue.popleft()
            queued.discard(c)
            for arrow, d, pairs in self._into[c]:
                pulled = frozenset(g for g, composite in pairs if composite in gens[c])
                shrunk = gens[d] & pulled
                if shrunk == gens[d]:
                    continue
                gens[d] = shrunk
                if trace is not None:
                    trace.append(
                        {
                            "step": "F3",
                            "morphism": arrow,
                            "source": self.objects[c],
                            "target": self.objects[d],
                            "result": self.carrier.ordered(shrunk),
                        }
                    )
                if not shrunk:
                    return None
                if d not in queued:
                    queue.append(d)
                    queued.add(d)
        return tuple(gens)

    def refine(self, generators: Generators, i: int, members: frozenset[str]) -> Generators | None:
        """Closed generators of the filter generated by ``generators`` plus one sieve."""
        key = (generators, i, members)
        if key not in self._cache:
            shrunk = generators[i] & members
            if shrunk == generators[i]:
                self._cache[key] = generators
            elif not shrunk:
                self._cache[key] = None
            else:
                gens = list(generators)
                gens[i] = shrunk
                self._cache[key] = self.propagate(gens, pending=[i])
        return self._cache[key]

    def candidates(self) -> list[tuple[int, frozenset[str]]]:
        """Every (object index, sieve) pair in canonical order."""
        return [
            (i, sieve.members)
            for i, obj in enumerate(self.objects)
            for sieve in self.carrier.sieves_on(obj)
        ]

    def is_maximal(self, generators: Generators) -> bool:
        """No proper strict refinement exists."""
        return all(
            generators[i] <= members or self.refine(generators, i, members) is None
            for i, members in self.candidates()
        )

    def generators_of(self, value: CoverAssignment | FilterCertificate) -> Generators:
        return tuple(filter_generators(value)[obj].members for obj in self.objects)

    def assignment(self, generators: Generators, name: str = "") -> CoverAssignment:
        """The filter F(C) = {S : S ⊇ g(C)}."""
        table = {
            obj: upward_closure(self.carrier, obj, [Sieve(obj, generators[i])])
            for i, obj in enumerate(self.objects)
        }
        return CoverAssignment(self.carrier, table, name)


def filter_generators(value: CoverAssignment | FilterCertificate) -> dict[str, Sieve]:
    """
    g(C) = intersection of F(C), or the maximal sieve when F(C) is empty.

    For a filter, F(C) is exactly the set of sieves containing g(C).
    """
    assignment = as_assignment(value)
    carrier = assignment.carrier
    return {
        obj: reduce(lambda a, b: a & b, assignment[obj], carrier.maximal(obj))
        for obj in carrier.objects
    }


def filter_from_basis(
    value: CoverAssignment | FilterCertificate, strict: bool | None = None
) -> FilterCertificate:
    """
    The filter generated by a basis: all sieves containing a basis sieve.

    Args:
        value: Candidate basis
        strict: Strict B2 reading (default from settings)

    Returns:
        Certified filter

    Raises:
        NotABasis: If the assignment is not a basis
    """
    basis = certify_basis(value, strict).assignment
    carrier = basis.carrier
    table = {obj: upward_closure(carrier, obj, basis[obj]) for obj in carrier.objects}
    return certify_filter(CoverAssignment(carrier, table, "filter_from_basis"))


def _relevant_steps(trace: list[dict[str, Any]]) -> list[dict[str, Any]]:
    # keep only the steps the final empty generator depends on
    needed = {trace[-1]["target"]}
    kept = []
    for step in reversed(trace):
        if step["target"] in needed:
            kept.append(step)
            if "source" in step:
                needed.add(step["source"])
    return list(reversed(kept))


def saturate_subbase(
    value: CoverAssignment | FilterCertificate, budget: int | None = None
) -> FilterCertificate:
    """
    The coarsest filter containing a subbase.

    Intersect each table (F2), then shrink generators along every arrow
    until pullback stability holds (F3).

    Args:
        value: Subbase
        budget: Saturation budget (default from settings)

    Returns:
        Certified filter

    Raises:
        ImproperFilter: If the closure manufactures the empty sieve; the
            exception carries the derivation trace
    """
    subbase = as_assignment(value)
    carrier = subbase.carrier
    kernel = SaturationKernel(carrier, budget)
    trace: list[dict[str, Any]] = []
    generators = []
    for obj in carrier.objects:
        sieves = subbase.sieves(obj)
        generator = reduce(lambda a, b: a & b, sieves, carrier.maximal(obj))
        if len(sieves) > 1:
            trace.append(
                {
                    "step": "F2",
                    "target": obj,
                    "sieves": [carrier.render(s) for s in sieves],
                    "result": carrier.render(generator),
                }
            )
        if generator.is_empty:
            raise ImproperFilter(
                f"Subbase intersects to the empty sieve at {obj}",
                trace=_relevant_steps(trace),
            )
        generators.append(generator.members)

    closed = kernel.propagate(generators, trace=trace)
    if closed is None:
        raise ImproperFilter(
            f"Saturation reaches the empty sieve at {trace[-1]['target']}",
            trace=_relevant_steps(trace),
        )
    logger.debug(f"Saturated subbase on {carrier.name} in {len(trace)} steps")
    return FilterCertificate(kernel.assignment(closed, "saturation"), CertifiedAs.FILTER)


def meet_filters(family: Sequence[CoverAssignment | FilterCertificate]) -> FilterCertificate:
    """
    Pointwise intersection, the greatest lower bound of the family.

    Raises:
        ValidationError: If the family is empty
        CarrierMismatch: If the members live on different carriers
        NotAFilter: If some member is not a filter
    """
    if not family:
        raise ValidationError("meet of an empty family of filters")
    members = [certify_filter(f).assignment for f in family]
    first = members[0]
    for other in members[1:]:
        first.same_carrier(other)
    table = {
        obj: frozenset.intersection(*(m[obj] for m in members)) for obj in first.objects
    }
    return certify_filter(CoverAssignment(first.carrier, table, "meet"))


def is_finer(
    coarse: CoverAssignment | FilterCertificate, fine: CoverAssignment | FilterCertificate
) -> bool:
    """
    True iff ``fine`` is finer than ``coarse`` (pointwise inclusion).

    Raises:
        CarrierMismatch: If the carriers differ
    """
    coarse, fine = as_assignment(coarse), as_assignment(fine)
    coarse.same_carrier(fine)
    return all(coarse[obj] <= fine[obj] for obj in coarse.objects)
