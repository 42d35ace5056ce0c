"""
Filter, basis and subbase axioms.

Checkers return verdicts; the ``certify_*`` helpers wrap a passing
assignment in a :class:`FilterCertificate` and raise otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any

from sieveforge.category.sieves import Sieve
from sieveforge.config.settings import get_settings
from sieveforge.core.exceptions import NotABasis, NotAFilter
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment


class CertifiedAs(Enum):
    """Which checker certified an assignment."""

    FILTER = "filter"
    BASIS = "basis"
    SUBBASE = "subbase"
    ULTRAFILTER = "ultrafilter"


@dataclass(frozen=True)
class FilterCertificate:
    """An assignment together with the axiom set it passed."""

    assignment: CoverAssignment
    certified_as: CertifiedAs

    @property
    def carrier(self):
        return self.assignment.carrier

    @property
    def objects(self) -> tuple[str, ...]:
        return self.assignment.objects

    def __getitem__(self, obj: str) -> frozenset[Sieve]:
        return self.assignment[obj]

    def sieves(self, obj: str) -> list[Sieve]:
        return self.assignment.sieves(obj)

    def to_dict(self) -> dict[str, Any]:
        return {"certified_as": self.certified_as.value, **self.assignment.to_dict()}


def as_assignment(value: CoverAssignment | FilterCertificate) -> CoverAssignment:
    if isinstance(value, FilterCertificate):
        return value.assignment
    return value


def check_filter(value: CoverAssignment | FilterCertificate) -> Verdict:
    """
    Check F1 (upward closure), F2 (nonempty, closed under binary
    intersection), F3 (pullback stability along every arrow) and F4 (no
    empty sieve).

    Axioms are checked in that order across all objects, so the first
    reported witness is for the earliest failing axiom.

    Args:
        value: Assignment to check

    Returns:
        Verdict labelled ``F1``, ``F2-nonempty``, ``F2``, ``F3`` or ``F4``
    """
    assignment = as_assignment(value)
    carrier = assignment.carrier
    render = carrier.render

    for obj in carrier.objects:
        for sieve in assignment.sieves(obj):
            for candidate in carrier.sieves_on(obj):
                if sieve.members <= candidate.members and candidate not in assignment[obj]:
                    return Verdict.fail(
                        "F1", object=obj, sieve=render(sieve), superset=render(candidate)
                    )

    for obj in carrier.objects:
        if not assignment[obj]:
            return Verdict.fail("F2-nonempty", object=obj)

    for obj in carrier.objects:
        sieves = assignment.sieves(obj)
        for i, first in enumerate(sieves):
            for second in sieves[i + 1 :]:
                meet = first & second
                if meet not in assignment[obj]:
                    return Verdict.fail(
                        "F2",
                        object=obj,
                        sieves=[render(first), render(second)],
                        intersection=render(meet),
                    )

    for obj in carrier.objects:
        for sieve in assignment.sieves(obj):
            for arrow, pulled in carrier.restrictions(sieve):
                if pulled not in assignment[pulled.owner]:
                    return Verdict.fail(
                        "F3",
                        object=obj,
                        sieve=render(sieve),
                        morphism=arrow,
                        target=pulled.owner,
                        pullback=render(pulled),
                    )

    for obj in carrier.objects:
        if carrier.empty(obj) in assignment[obj]:
            return Verdict.fail("F4", object=obj)

    return Verdict.ok()


def check_subbase(value: CoverAssignment | FilterCertificate) -> Verdict:
    """
    Check that no finite subfamily at any object has empty intersection.

    On a finite carrier it suffices to intersect the whole family.
    """
    assignment = as_assignment(value)
    carrier = assignment.carrier
    for obj in carrier.objects:
        sieves = assignment.sieves(obj)
        if sieves and reduce(lambda a, b: a & b, sieves).is_empty:
            return Verdict.fail(
                "finite-intersection",
                object=obj,
                sieves=[carrier.render(s) for s in sieves],
            )
    return Verdict.ok()


def check_basis(
    value: CoverAssignment | FilterCertificate, strict: bool | None = None
) -> Verdict:
    """
    Check the basis axioms.

    B3: each table is nonempty and omits the empty sieve. B1: the
    intersection of two basis sieves contains a basis sieve. B2: the
    pullback of a basis sieve contains a basis sieve (``strict``: is one).

    Args:
        value: Assignment to check
        strict: Strict B2; defaults to ``enumeration.strict_basis``

    Returns:
        Verdict labelled ``B1``, ``B2`` or ``B3``
    """
    if strict is None:
        strict = get_settings().enumeration.strict_basis
    assignment = as_assignment(value)
    carrier = assignment.carrier
    render = carrier.render

    def contains_member(obj: str, sieve: Sieve) -> bool:
        if strict:
            return sieve in assignment[obj]
        return any(member.members <= sieve.members for member in assignment[obj])

    for obj in carrier.objects:
        if not assignment[obj]:
            return Verdict.fail("B3", object=obj, reason="empty table")
        if carrier.empty(obj) in assignment[obj]:
            return Verdict.fail("B3", object=obj, reason="empty sieve")

    for obj in carrier.objects:
        sieves = assignment.sieves(obj)
        for i, first in enumerate(sieves):
            for second in sieves[i + 1 :]:
                meet = first & second
                if not any(m.members <= meet.members for m in sieves):
                    return Verdict.fail(
                        "B1",
                        object=obj,
                        sieves=[render(first), render(second)],
                        intersection=render(meet),
                    )

    for obj in carrier.objects:
        for sieve in assignment.sieves(obj):
            for arrow, pulled in carrier.restrictions(sieve):
                if not contains_member(pulled.owner, pulled):
                    return Verdict.fail(
                        "B2",
                        object=obj,
                        sieve=render(sieve),
                        morphism=arrow,
                        target=pulled.owner,
                        pullback=render(pulled),
                        strict=strict,
                    )
    return Verdict.ok()


def certify_filter(value: CoverAssignment | FilterCertificate) -> FilterCertificate:
    """
    Raises:
        NotAFilter: If check_filter fails
    """
    if isinstance(value, FilterCertificate) and value.certified_as in (
        CertifiedAs.FILTER,
        CertifiedAs.ULTRAFILTER,
    ):
        return value
    assignment = as_assignment(value)
    verdict = check_filter(assignment)
    if not verdict.passed:
        raise NotAFilter(
            f"{assignment.name or 'assignment'} is not a filter",
            details=verdict.axiom,
            witness=verdict.witness.to_dict(),
        )
    return FilterCertificate(assignment, CertifiedAs.FILTER)


def certify_basis(
    value: CoverAssignment | FilterCertificate, strict: bool | None = None
) -> FilterCertificate:
    """
    Raises:
        NotABasis: If check_basis fails
    """
    assignment = as_assignment(value)
    verdict = check_basis(assignment, strict)
    if not verdict.passed:
        raise NotABasis(
            f"{assignment.name or 'assignment'} is not a filter basis",
            details=verdict.axiom,
            witness=verdict.witness.to_dict(),
        )
    return FilterCertificate(assignment, CertifiedAs.BASIS)
