"""
Cover assignments: object -> set of sieves.

The same value carries Grothendieck topologies, filters, bases and
subbases; which one it is depends only on the checker that certifies it.
"""

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from sieveforge.category.carrier import Carrier, Flavor, carrier_of
from sieveforge.category.sieves import Sieve
from sieveforge.core.exceptions import CarrierMismatch, OwnerMismatch

SieveLike = Sieve | Iterable[str]


@dataclass(frozen=True, eq=False)
class CoverAssignment:
    """
    A total map from the carrier's objects to sets of sieves.

    Two assignments are equal when they share a carrier and a table.
    """

    carrier: Carrier
    table: Mapping[str, frozenset[Sieve]]
    name: str = ""

    def __post_init__(self):
        for obj in self.table:
            self.carrier.check_object(obj)
        missing = {obj: frozenset() for obj in self.carrier.objects if obj not in self.table}
        if missing:
            object.__setattr__(self, "table", {**self.table, **missing})

    @property
    def flavor(self) -> Flavor:
        return self.carrier.flavor

    @property
    def objects(self) -> tuple[str, ...]:
        return self.carrier.objects

    def __getitem__(self, obj: str) -> frozenset[Sieve]:
        return self.table[self.carrier.check_object(obj)]

    def __iter__(self) -> Iterator[str]:
        return iter(self.carrier.objects)

    def sieves(self, obj: str) -> list[Sieve]:
        """Sieves at obj in canonical order."""
        return sorted(self[obj], key=self.carrier.sieve_key)

    def covers(self, obj: str, sieve: Sieve) -> bool:
        return sieve in self[obj]

    def fingerprint(self) -> tuple[frozenset[frozenset[str]], ...]:
        return tuple(
            frozenset(s.members for s in self.table[obj]) for obj in self.carrier.objects
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoverAssignment):
            return NotImplemented
        return self.carrier is other.carrier and self.fingerprint() == other.fingerprint()

    def __hash__(self) -> int:
        return hash((id(self.carrier), self.fingerprint()))

    def same_carrier(self, other: "CoverAssignment") -> None:
        """
        Raises:
            CarrierMismatch: If the assignments live on different carriers
        """
        if self.carrier is not other.carrier:
            raise CarrierMismatch(
                "Assignments live on different carriers",
                details=f"{self.carrier.name} vs {other.carrier.name}",
            )

    def replace(self, obj: str, sieves: Iterable[Sieve]) -> "CoverAssignment":
        """Copy with the table at obj replaced."""
        table = dict(self.table)
        table[self.carrier.check_object(obj)] = frozenset(sieves)
        return CoverAssignment(self.carrier, table, self.name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "carrier": self.carrier.name,
            "flavor": self.flavor.value,
            "table": {
                obj: [self.carrier.render(s) for s in self.sieves(obj)]
                for obj in self.carrier.objects
            },
        }

    def __repr__(self) -> str:
        label = self.name or "CoverAssignment"
        body = "; ".join(
            f"{obj}: {[self.carrier.render(s) for s in self.sieves(obj)]}"
            for obj in self.carrier.objects
        )
        return f"<{label} on {self.carrier.name} | {body}>"


def _as_sieve(carrier: Carrier, obj: str, value: SieveLike) -> Sieve:
    if isinstance(value, Sieve):
        if value.owner != obj:
            raise OwnerMismatch(
                f"Sieve owned by {value.owner} listed at {obj}",
                details=str(carrier.render(value)),
            )
        carrier.sieve(obj, value.members)
        return value
    return carrier.sieve(obj, value)


def cover_assignment(
    structure: Any,
    table: Mapping[str, Iterable[SieveLike]],
    name: str = "",
) -> CoverAssignment:
    """
    Build a validated assignment.

    Entries may be Sieve values or plain member lists; objects absent from
    ``table`` get the empty set.

    Args:
        structure: Category, lattice or carrier
        table: Object -> sieves
        name: Optional display name

    Returns:
        CoverAssignment

    Raises:
        ValidationError: If some entry is not a sieve on its object
        OwnerMismatch: If a Sieve value is listed under another object
    """
    carrier = carrier_of(structure)
    built = {
        carrier.check_object(obj): frozenset(_as_sieve(carrier, obj, s) for s in sieves)
        for obj, sieves in table.items()
    }
    return CoverAssignment(carrier, built, name)


def assignment_from(
    structure: Any,
    rule: Callable[[Carrier, str], Iterable[Sieve]],
    name: str = "",
) -> CoverAssignment:
    """Build an assignment by applying ``rule(carrier, obj)`` at every object."""
    carrier = carrier_of(structure)
    return CoverAssignment(
        carrier, {obj: frozenset(rule(carrier, obj)) for obj in carrier.objects}, name
    )


def upward_closure(carrier: Carrier, obj: str, sieves: Iterable[Sieve]) -> frozenset[Sieve]:
    """All sieves on obj containing at least one of ``sieves``."""
    sieves = list(sieves)
    return frozenset(
        candidate
        for candidate in carrier.sieves_on(obj)
        if any(s.members <= candidate.members for s in sieves)
    )
