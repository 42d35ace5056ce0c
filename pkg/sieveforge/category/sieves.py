"""
The sieve value type shared by the category and locale flavors.
"""

from dataclasses import dataclass

from sieveforge.core.exceptions import OwnerMismatch


@dataclass(frozen=True)
class Sieve:
    """
    A right ideal of morphisms into ``owner``.

    In the locale flavor members are element identifiers standing for the
    unique morphisms m -> owner, so a sieve is a down-set of ``↓owner``.
    Validity against a carrier is established by the carrier that builds it.
    """

    owner: str
    members: frozenset[str]

    def _same_owner(self, other: "Sieve") -> None:
        if other.owner != self.owner:
            raise OwnerMismatch(
                "Sieves live on different objects",
                details=f"{self.owner} vs {other.owner}",
            )

    def __and__(self, other: "Sieve") -> "Sieve":
        self._same_owner(other)
        return Sieve(self.owner, self.members & other.members)

    def __or__(self, other: "Sieve") -> "Sieve":
        self._same_owner(other)
        return Sieve(self.owner, self.members | other.members)

    def __le__(self, other: "Sieve") -> bool:
        self._same_owner(other)
        return self.members <= other.members

    def __ge__(self, other: "Sieve") -> bool:
        self._same_owner(other)
        return self.members >= other.members

    def __contains__(self, arrow: object) -> bool:
        return arrow in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_empty(self) -> bool:
        return not self.members

    def meets(self, other: "Sieve") -> bool:
        """True iff the intersection is nonempty."""
        return not self.members.isdisjoint(other.members)
