"""
One sieve calculus over two carriers.

A carrier is either a finite category (sieves are sets of morphism ids) or
a finite lattice read as a locale (sieves are down-sets of ``↓k``, element
ids standing for the unique morphisms m -> k). Everything above this
module talks to a :class:`Carrier` and never to the flavor directly.
"""

import logging
import weakref
from abc import ABC, abstractmethod
from collections.abc import Iterable
from enum import Enum

from sieveforge.category.category import FiniteCategory
from sieveforge.category.sieves import Sieve
from sieveforge.config.settings import get_settings
from sieveforge.core.exceptions import (
    BadCodomain,
    BudgetExceeded,
    CompositionTypeError,
    OwnerMismatch,
    ValidationError,
)
from sieveforge.core.verdict import Verdict
from sieveforge.order.lattice import FiniteLattice

logger = logging.getLogger(__name__)


class Flavor(Enum):
    """Which reading of sieves a carrier uses."""

    CATEGORY = "category"
    LOCALE = "locale"


class Carrier(ABC):
    """Sieve universe over a category or a lattice."""

    flavor: Flavor

    def __init__(self, structure: FiniteCategory | FiniteLattice):
        self.structure = structure
        self._sieves: dict[str, tuple[Sieve, ...]] = {}
        self._logger = logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return self.structure.name

    @property
    @abstractmethod
    def objects(self) -> tuple[str, ...]:
        """Objects (elements) in canonical order."""

    @abstractmethod
    def check_object(self, obj: str) -> str:
        """Return obj or raise a lookup error."""

    @abstractmethod
    def arrows_into(self, obj: str) -> tuple[str, ...]:
        """Arrows with codomain obj, canonical order."""

    @abstractmethod
    def arrow_domain(self, arrow: str) -> str:
        """Domain object of an arrow."""

    @abstractmethod
    def arrow_position(self, arrow: str) -> int:
        """Global canonical position of an arrow."""

    @abstractmethod
    def lands_in(self, arrow: str, obj: str) -> bool:
        """True iff ``arrow`` is an arrow into ``obj``."""

    @abstractmethod
    def compose_into(self, arrow: str, g: str) -> str:
        """arrow∘g for g an arrow into dom(arrow)."""

    def object_position(self, obj: str) -> int:
        return self.objects.index(self.check_object(obj))

    def ordered(self, members: Iterable[str]) -> list[str]:
        """Arrow ids in canonical order."""
        return sorted(members, key=self.arrow_position)

    def sieve_key(self, sieve: Sieve) -> tuple[int, tuple[int, ...]]:
        """Canonical sort key: size first, then sorted positions."""
        return len(sieve.members), tuple(
            sorted(self.arrow_position(m) for m in sieve.members)
        )

    def render(self, sieve: Sieve) -> list[str]:
        return self.ordered(sieve.members)

    def maximal(self, obj: str) -> Sieve:
        """The maximal sieve t_obj."""
        return Sieve(obj, frozenset(self.arrows_into(obj)))

    def empty(self, obj: str) -> Sieve:
        self.check_object(obj)
        return Sieve(obj, frozenset())

    def principal(self, obj: str, arrow: str) -> Sieve:
        """Sieve on obj generated by a single arrow."""
        if not self.lands_in(arrow, obj):
            raise BadCodomain(
                f"{arrow} is not an arrow into {obj}", witness={"morphism": arrow}
            )
        return Sieve(
            obj,
            frozenset(
                self.compose_into(arrow, g)
                for g in self.arrows_into(self.arrow_domain(arrow))
            ),
        )

    def generated(self, obj: str, generators: Iterable[str]) -> Sieve:
        """Least sieve on obj containing the generators."""
        members: set[str] = set()
        for arrow in generators:
            members |= self.principal(obj, arrow).members
        return Sieve(self.check_object(obj), frozenset(members))

    def check_sieve(self, obj: str, members: Iterable[str]) -> Verdict:
        """
        Check the codomain and right-ideal conditions.

        Args:
            obj: Owner object
            members: Arrow ids

        Returns:
            Verdict with axiom ``codomain`` or ``right-ideal`` on failure

        Raises:
            UnknownObject: If an arrow id is not part of the carrier
        """
        self.check_object(obj)
        members = set(members)
        ordered = self.ordered(members)
        for arrow in ordered:
            if not self.lands_in(arrow, obj):
                return Verdict.fail("codomain", object=obj, morphism=arrow)
        for arrow in ordered:
            for g in self.arrows_into(self.arrow_domain(arrow)):
                composite = self.compose_into(arrow, g)
                if composite not in members:
                    return Verdict.fail(
                        "right-ideal",
                        object=obj,
                        morphisms=[arrow, g],
                        composite=composite,
                    )
        return Verdict.ok()

    def sieve(self, obj: str, members: Iterable[str]) -> Sieve:
        """
        Build a validated sieve.

        Raises:
            ValidationError: If the members do not form a sieve on obj
        """
        members = frozenset(members)
        verdict = self.check_sieve(obj, members)
        if not verdict.passed:
            raise ValidationError(
                f"Not a sieve on {obj}",
                details=str(self.ordered(members)),
                witness=verdict.witness.to_dict(),
            )
        return Sieve(obj, members)

    def pullback(self, arrow: str, sieve: Sieve) -> Sieve:
        """
        h*(S) = {g : cod(g) = dom(h), h∘g ∈ S}.

        Raises:
            OwnerMismatch: If ``arrow`` is not an arrow into S.owner
        """
        if not self.lands_in(arrow, sieve.owner):
            raise OwnerMismatch(
                f"{arrow} does not land in the owner of the sieve",
                details=f"owner {sieve.owner}",
            )
        domain = self.arrow_domain(arrow)
        return Sieve(
            domain,
            frozenset(
                g
                for g in self.arrows_into(domain)
                if self.compose_into(arrow, g) in sieve.members
            ),
        )

    def restrictions(self, sieve: Sieve) -> list[tuple[str, Sieve]]:
        """(h, h*(S)) for every arrow h into the owner."""
        return [(h, self.pullback(h, sieve)) for h in self.arrows_into(sieve.owner)]

    def sieves_on(self, obj: str, limit: int | None = None) -> tuple[Sieve, ...]:
        """
        All sieves on obj in canonical order, cached per carrier.

        Every sieve is a union of principal sieves, so the enumeration is a
        breadth-first closure of principal member masks under union.

        Args:
            obj: Owner object
            limit: Maximum number of sieves (default from settings)

        Raises:
            BudgetExceeded: If obj carries more than ``limit`` sieves
        """
        limit = get_settings().enumeration.max_sieves if limit is None else limit
        self.check_object(obj)
        if obj not in self._sieves:
            arrows = self.arrows_into(obj)
            bit = {a: 1 << i for i, a in enumerate(arrows)}
            masks = {
                sum(bit[m] for m in self.principal(obj, a).members) for a in arrows
            }
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
                            if len(seen) > limit:
                                raise BudgetExceeded(
                                    f"More than {limit} sieves on {obj}",
                                    details=f"carrier {self.name}",
                                )
                frontier = nxt
            found = [
                Sieve(obj, frozenset(a for a in arrows if mask & bit[a]))
                for mask in seen
            ]
            found.sort(key=self.sieve_key)
            self._sieves[obj] = tuple(found)
            self._logger.debug(f"{self.name}: {len(found)} sieves on {obj}")
        sieves = self._sieves[obj]
        if len(sieves) > limit:
            raise BudgetExceeded(
                f"More than {limit} sieves on {obj}", details=f"carrier {self.name}"
            )
        return sieves


class CategoryCarrier(Carrier):
    """Sieves of a finite category."""

    flavor = Flavor.CATEGORY

    def __init__(self, category: FiniteCategory):
        super().__init__(category)
        self.category = category
        self._into = {obj: tuple(category.arrows_into(obj)) for obj in category.objects}

    @property
    def objects(self) -> tuple[str, ...]:
        return self.category.objects

    def check_object(self, obj: str) -> str:
        return self.category.check_object(obj)

    def arrows_into(self, obj: str) -> tuple[str, ...]:
        self.check_object(obj)
        return self._into[obj]

    def arrow_domain(self, arrow: str) -> str:
        return self.category.dom(arrow)

    def arrow_position(self, arrow: str) -> int:
        return self.category.position(arrow)

    def lands_in(self, arrow: str, obj: str) -> bool:
        return self.category.cod(arrow) == obj

    def compose_into(self, arrow: str, g: str) -> str:
        composite = self.category.compose(arrow, g)
        if composite is None:
            raise CompositionTypeError(f"{arrow}∘{g} is not composable")
        return composite


class LocaleCarrier(Carrier):
    """Sieves of a finite lattice read as a locale."""

    flavor = Flavor.LOCALE

    def __init__(self, lattice: FiniteLattice):
        super().__init__(lattice)
        self.lattice = lattice

    @property
    def objects(self) -> tuple[str, ...]:
        return self.lattice.elements

    def check_object(self, obj: str) -> str:
        self.lattice.position(obj)
        return obj

    def arrows_into(self, obj: str) -> tuple[str, ...]:
        return self.lattice.below(obj)

    def arrow_domain(self, arrow: str) -> str:
        return self.check_object(arrow)

    def arrow_position(self, arrow: str) -> int:
        return self.lattice.position(arrow)

    def lands_in(self, arrow: str, obj: str) -> bool:
        return self.lattice.le(arrow, obj)

    def compose_into(self, arrow: str, g: str) -> str:
        return g


_carriers: "weakref.WeakKeyDictionary[object, Carrier]" = weakref.WeakKeyDictionary()


def carrier_of(structure: "FiniteCategory | FiniteLattice | Carrier") -> Carrier:
    """
    The cached carrier of a category or lattice.

    Lattices get the locale reading; use ``poset_category`` first for the
    category reading of a lattice.
    """
    if isinstance(structure, Carrier):
        return structure
    if structure not in _carriers:
        if isinstance(structure, FiniteCategory):
            _carriers[structure] = CategoryCarrier(structure)
        elif isinstance(structure, FiniteLattice):
            _carriers[structure] = LocaleCarrier(structure)
        else:
            raise TypeError(f"not a carrier: {type(structure).__name__}")
    return _carriers[structure]


def maximal_sieve(structure, obj: str) -> Sieve:
    """t_obj: every arrow into obj."""
    return carrier_of(structure).maximal(obj)


def is_sieve(structure, obj: str, members: Iterable[str]) -> Verdict:
    return carrier_of(structure).check_sieve(obj, members)


def generated_sieve(structure, obj: str, generators: Iterable[str]) -> Sieve:
    """
    Least sieve on obj containing the generators.

    Raises:
        BadCodomain: If some generator is not an arrow into obj
    """
    return carrier_of(structure).generated(obj, generators)


def principal_sieve(structure, obj: str, arrow: str) -> Sieve:
    return carrier_of(structure).principal(obj, arrow)


def pullback_sieve(structure, arrow: str, sieve: Sieve) -> Sieve:
    """h*(S) as a sieve on the domain of h."""
    return carrier_of(structure).pullback(arrow, sieve)


def sieves_on(structure, obj: str, limit: int | None = None) -> tuple[Sieve, ...]:
    return carrier_of(structure).sieves_on(obj, limit)
