"""
Up-set and down-set machinery over a finite lattice.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from sieveforge.core.exceptions import BudgetExceeded, UnknownElement
from sieveforge.core.verdict import Verdict
from sieveforge.order.lattice import FiniteLattice


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of a lattice's elements; iteration follows canonical order."""

    carrier: FiniteLattice
    members: frozenset[str]

    def __post_init__(self):
        for m in self.members:
            if m not in self.carrier:
                raise UnknownElement(
                    f"Element not in lattice {self.carrier.name}", details=repr(m)
                )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ElementSet):
            return self.carrier is other.carrier and self.members == other.members
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.carrier), self.members))

    def __contains__(self, element: object) -> bool:
        return element in self.members

    def __iter__(self) -> Iterator[str]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.members)

    def ordered(self) -> tuple[str, ...]:
        return self.carrier.canonical(self.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.ordered()) + "}"


def element_set(lattice: FiniteLattice, members: Iterable[str]) -> ElementSet:
    return ElementSet(lattice, frozenset(str(m) for m in members))


def principal_down(lattice: FiniteLattice, x: str) -> ElementSet:
    """↓x = {y : y <= x}."""
    return element_set(lattice, lattice.below(x))


def principal_up(lattice: FiniteLattice, x: str) -> ElementSet:
    """↑x = {y : x <= y}."""
    return element_set(lattice, lattice.above(x))


def closure_down(lattice: FiniteLattice, members: Iterable[str]) -> ElementSet:
    """↓M, the union of ↓m over m in M."""
    result: set[str] = set()
    for m in members:
        result.update(lattice.below(m))
    return element_set(lattice, result)


def closure_up(lattice: FiniteLattice, members: Iterable[str]) -> ElementSet:
    """↑M, the union of ↑m over m in M."""
    result: set[str] = set()
    for m in members:
        result.update(lattice.above(m))
    return element_set(lattice, result)


def is_down_set(lattice: FiniteLattice, members: Iterable[str]) -> bool:
    members = set(members)
    return all(set(lattice.below(m)) <= members for m in members)


def is_up_set(lattice: FiniteLattice, members: Iterable[str]) -> bool:
    members = set(members)
    return all(set(lattice.above(m)) <= members for m in members)


def _masks(lattice: FiniteLattice, up: bool) -> list[int]:
    masks = []
    for x in lattice.elements:
        related = lattice.above(x) if up else lattice.below(x)
        masks.append(sum(1 << lattice.position(y) for y in related))
    return masks


def _unions_of(masks: list[int], limit: int | None) -> list[int]:
    # Every down-set (up-set) is a union of principal ones.
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for current in frontier:
            for mask in masks:
                candidate = current | mask
                if candidate not in seen:
                    seen.add(candidate)
                    nxt.append(candidate)
                    if limit is not None and len(seen) > limit:
                        raise BudgetExceeded(
                            "Set enumeration exceeds budget", details=str(limit)
                        )
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), _bits(m)))


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _to_set(lattice: FiniteLattice, mask: int) -> ElementSet:
    return element_set(lattice, (lattice.elements[i] for i in _bits(mask)))


def down_sets(lattice: FiniteLattice, limit: int | None = None) -> list[ElementSet]:
    """
    All down-sets of the lattice in canonical order (size, then positions).

    Args:
        lattice: Lattice to enumerate
        limit: Optional maximum number of sets

    Returns:
        List of down-sets, the empty set first
    """
    return [_to_set(lattice, m) for m in _unions_of(_masks(lattice, False), limit)]


def up_sets(lattice: FiniteLattice, limit: int | None = None) -> list[ElementSet]:
    """All up-sets of the lattice in canonical order."""
    return [_to_set(lattice, m) for m in _unions_of(_masks(lattice, True), limit)]


def is_lattice_filter(lattice: FiniteLattice, members: Iterable[str]) -> Verdict:
    """
    Check the classical lattice notion of filter.

    A filter is a nonempty up-closed subset closed under binary meets.

    Args:
        lattice: Carrier lattice
        members: Candidate subset

    Returns:
        Verdict naming the failed condition
    """
    members = set(members)
    if not members:
        return Verdict.fail("nonempty")
    for m in lattice.canonical(members):
        for y in lattice.above(m):
            if y not in members:
                return Verdict.fail("up-closed", element=m, missing=y)
    for a in lattice.canonical(members):
        for b in lattice.canonical(members):
            if lattice.meet(a, b) not in members:
                return Verdict.fail(
                    "meet-closed", pair=[a, b], missing=lattice.meet(a, b)
                )
    return Verdict.ok()


def is_prime_filter(lattice: FiniteLattice, members: Iterable[str]) -> Verdict:
    """
    Check that a subset is a proper prime filter.

    Proper means the bottom element is excluded; prime means a∨b in F
    forces a in F or b in F.
    """
    members = set(members)
    verdict = is_lattice_filter(lattice, members)
    if not verdict.passed:
        return verdict
    if lattice.bottom in members:
        return Verdict.fail("proper", element=lattice.bottom)
    for a in lattice.elements:
        for b in lattice.elements:
            if (
                lattice.join(a, b) in members
                and a not in members
                and b not in members
            ):
                return Verdict.fail("prime", pair=[a, b], join=lattice.join(a, b))
    return Verdict.ok()
