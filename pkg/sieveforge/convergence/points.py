"""
Points of a site.

A categorical point is a morphism out of the designated terminal object.
A locale point is a frame homomorphism L -> 2, stored as its dual kernel
p^{-1}(1) (a prime filter) and its kernel p^{-1}(0). The two notions are
kept apart: in a poset category the only object with points is the top.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from sieveforge.category.carrier import Flavor
from sieveforge.category.category import CatPoint, category_points
from sieveforge.core.exceptions import NotAFrame, PointMismatch
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.order.element_sets import is_prime_filter, up_sets
from sieveforge.order.lattice import FiniteLattice, is_frame, meet_of


@dataclass(frozen=True, eq=False)
class LocalePoint:
    """A frame homomorphism to 2 given by its dual kernel."""

    carrier: FiniteLattice
    dual_kernel: frozenset[str]
    kernel: frozenset[str]

    @property
    def generator(self) -> str:
        """The least element of the dual kernel (finite prime filters are principal)."""
        return meet_of(self.carrier, self.dual_kernel)

    @property
    def label(self) -> str:
        return self.generator

    def evaluate(self, x: str) -> int:
        """p(x) in {0, 1}."""
        self.carrier.position(x)
        return int(x in self.dual_kernel)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalePoint):
            return NotImplemented
        return self.carrier is other.carrier and self.dual_kernel == other.dual_kernel

    def __hash__(self) -> int:
        return hash((id(self.carrier), self.dual_kernel))

    def to_dict(self) -> dict[str, Any]:
        return {
            "generator": self.generator,
            "dual_kernel": list(self.carrier.canonical(self.dual_kernel)),
            "kernel": list(self.carrier.canonical(self.kernel)),
        }

    def __repr__(self) -> str:
        return f"LocalePoint(↑{self.generator})"


Point = CatPoint | LocalePoint


def point_label(point: Point) -> str:
    return point.label


def point_to_dict(point: Point) -> dict[str, Any]:
    if isinstance(point, LocalePoint):
        return point.to_dict()
    return {"morphism": point.morphism, "terminal": point.terminal, "target": point.target}


def _require_frame(lattice: FiniteLattice) -> None:
    verdict = is_frame(lattice)
    if not verdict.passed:
        raise NotAFrame(f"{lattice.name} is not a frame", witness=verdict.witness.to_dict())


def locale_points(lattice: FiniteLattice) -> list[LocalePoint]:
    """
    All frame homomorphisms L -> 2, by scanning up-sets for prime filters.

    Raises:
        NotAFrame: If the lattice is not distributive
    """
    _require_frame(lattice)
    points = []
    everything = frozenset(lattice.elements)
    for candidate in up_sets(lattice):
        if is_prime_filter(lattice, candidate.members).passed:
            points.append(
                LocalePoint(lattice, candidate.members, everything - candidate.members)
            )
    return points


def is_frame_homomorphism(lattice: FiniteLattice, values: Mapping[str, int]) -> Verdict:
    """
    Check that a 0/1 valuation preserves top, bottom, binary meets and joins.

    Args:
        lattice: Source lattice
        values: Element -> 0 or 1 for every element

    Returns:
        Verdict labelled ``total``, ``top``, ``bottom``, ``meet`` or ``join``
    """
    for x in lattice.elements:
        if values.get(x) not in (0, 1):
            return Verdict.fail("total", element=x)
    if values[lattice.top] != 1:
        return Verdict.fail("top", element=lattice.top)
    if values[lattice.bottom] != 0:
        return Verdict.fail("bottom", element=lattice.bottom)
    for x in lattice.elements:
        for y in lattice.elements:
            if values[lattice.meet(x, y)] != min(values[x], values[y]):
                return Verdict.fail("meet", elements=[x, y])
            if values[lattice.join(x, y)] != max(values[x], values[y]):
                return Verdict.fail("join", elements=[x, y])
    return Verdict.ok()


def points_of(site: CoverAssignment, obj: str) -> list[Point]:
    """
    The points relevant at obj.

    Category flavor: morphisms 1 -> obj. Locale flavor: points whose kernel
    contains obj.
    """
    carrier = site.carrier
    carrier.check_object(obj)
    if carrier.flavor is Flavor.CATEGORY:
        return list(category_points(carrier.structure, obj))
    return [p for p in locale_points(carrier.structure) if obj in p.kernel]


def check_point(site: CoverAssignment, obj: str, point: Point) -> None:
    """
    Raises:
        PointMismatch: If the point does not belong to obj
    """
    carrier = site.carrier
    carrier.check_object(obj)
    if carrier.flavor is Flavor.CATEGORY:
        if not isinstance(point, CatPoint) or point.target != obj:
            raise PointMismatch(f"{point!r} is not a point of {obj}")
        if carrier.structure.cod(point.morphism) != obj:
            raise PointMismatch(f"{point.morphism} does not land in {obj}")
    else:
        if not isinstance(point, LocalePoint) or point.carrier is not carrier.structure:
            raise PointMismatch(f"{point!r} is not a point of {carrier.name}")
        if obj not in point.kernel:
            raise PointMismatch(
                f"{obj} is not in the kernel of {point!r}",
                details=str(list(carrier.structure.canonical(point.kernel))),
            )


def resolve_point(site: CoverAssignment, obj: str, label: str) -> Point:
    """
    Look up a point of obj by label (morphism id or generating element).

    Raises:
        PointMismatch: If no point of obj carries the label
    """
    for point in points_of(site, obj):
        if point.label == label:
            return point
    raise PointMismatch(f"No point labelled {label!r} at {obj}")
