"""
Product filter bases on a locale.

The product of filters F_i at targets k_i lives below k = ⋀ k_i; its basis
at an element e consists of the sieves ↓e ∩ ⋂ S_i with S_i ∈ F_i(k_i).
"""

import logging
from collections.abc import Sequence
from itertools import product

from sieveforge.category.carrier import carrier_of
from sieveforge.category.sieves import Sieve
from sieveforge.core.exceptions import CarrierMismatch, EmptyMeetSieve, ValidationError
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.filters.axioms import (
    FilterCertificate,
    certify_basis,
    certify_filter,
)
from sieveforge.filters.generation import filter_from_basis, saturate_subbase
from sieveforge.order.lattice import FiniteLattice, meet_of

logger = logging.getLogger(__name__)


def _validate(
    lattice: FiniteLattice,
    targets: Sequence[str],
    filters: Sequence[CoverAssignment | FilterCertificate],
) -> list[CoverAssignment]:
    if not targets:
        raise ValidationError("product of an empty family")
    if len(targets) != len(filters):
        raise ValidationError(
            "targets and filters differ in length",
            details=f"{len(targets)} vs {len(filters)}",
        )
    carrier = carrier_of(lattice)
    certified = []
    for target, value in zip(targets, filters):
        lattice.position(target)
        assignment = certify_filter(value).assignment
        if assignment.carrier is not carrier:
            raise CarrierMismatch(
                f"Filter at {target} does not live on {lattice.name}",
                details=assignment.carrier.name,
            )
        certified.append(assignment)
    return certified


def product_filter_basis(
    lattice: FiniteLattice,
    targets: Sequence[str],
    filters: Sequence[CoverAssignment | FilterCertificate],
) -> FilterCertificate:
    """
    Basis of the product of filters F_i taken at targets k_i.

    Args:
        lattice: The locale
        targets: Elements k_i
        filters: Filter F_i for each target

    Returns:
        Certified basis; at k = ⋀ k_i its table is {⋂ (S_i ∩ ↓k)}

    Raises:
        EmptyMeetSieve: If some combination intersects to the empty sieve
        CarrierMismatch: If a filter lives on another carrier
        NotAFilter: If some F_i is not a filter
    """
    families = _validate(lattice, targets, filters)
    carrier = carrier_of(lattice)
    combinations = list(
        product(*(f.sieves(target) for f, target in zip(families, targets)))
    )
    table: dict[str, frozenset[Sieve]] = {}
    for element in lattice.elements:
        members = set()
        for combo in combinations:
            meet = frozenset(lattice.below(element)).intersection(*(s.members for s in combo))
            if not meet:
                raise EmptyMeetSieve(
                    f"Product combination is empty at {element}",
                    witness={
                        "element": element,
                        "sieves": [carrier.render(s) for s in combo],
                    },
                )
            members.add(Sieve(element, meet))
        table[element] = frozenset(members)
    basis = CoverAssignment(carrier, table, "product_basis")
    logger.debug(
        f"Product basis on {lattice.name} over {list(targets)}: "
        f"{len(combinations)} combinations"
    )
    return certify_basis(basis, strict=False)


def product_meet(lattice: FiniteLattice, targets: Sequence[str]) -> str:
    """k = ⋀ targets."""
    return meet_of(lattice, targets)


def product_corollary_check(
    lattice: FiniteLattice,
    targets: Sequence[str],
    filters: Sequence[CoverAssignment | FilterCertificate],
) -> Verdict:
    """
    The product basis and the restricted families {S_i ∩ ↓e} generate the
    same filter.

    Returns:
        Verdict labelled ``product-generation`` with the first differing
        element on failure
    """
    families = _validate(lattice, targets, filters)
    carrier = carrier_of(lattice)
    from_basis = filter_from_basis(product_filter_basis(lattice, targets, families))
    subbase = CoverAssignment(
        carrier,
        {
            element: frozenset(
                Sieve(element, frozenset(lattice.below(element)) & s.members)
                for f, target in zip(families, targets)
                for s in f[target]
            )
            for element in lattice.elements
        },
        "product_subbase",
    )
    from_subbase = saturate_subbase(subbase)
    for element in lattice.elements:
        if from_basis[element] != from_subbase[element]:
            return Verdict.fail(
                "product-generation",
                element=element,
                from_basis=[carrier.render(s) for s in from_basis.sieves(element)],
                from_subbase=[carrier.render(s) for s in from_subbase.sieves(element)],
            )
    return Verdict.ok()
