"""
𝔊-neighborhoods and cover-neighborhood systems of a point.
"""

from dataclasses import dataclass
from typing import Any

from sieveforge.category.carrier import Flavor
from sieveforge.category.category import category_points
from sieveforge.category.sieves import Sieve
from sieveforge.convergence.points import Point, check_point, point_to_dict
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment, upward_closure


def _factors(site: CoverAssignment, sieve: Sieve, point: Point) -> bool:
    # ∃ φ ∈ V and a point q of dom(φ) with φ∘q = p
    category = site.carrier.structure
    return any(
        category.compose(phi, q.morphism) == point.morphism
        for phi in site.carrier.ordered(sieve.members)
        for q in category_points(category, category.dom(phi))
    )


def g_neighborhoods(site: CoverAssignment, obj: str, point: Point) -> list[Sieve]:
    """
    Covering sieves at obj that witness the point.

    Category flavor: V ∈ J(obj) through which p factors. Locale flavor:
    V ∈ J(obj) contained in the kernel of p, which is every V ∈ J(obj)
    since obj lies in the kernel. The empty sieve counts when it covers,
    and its cover-neighborhood system then fails the filtered axioms.

    Raises:
        PointMismatch: If the point does not belong to obj
    """
    check_point(site, obj, point)
    if site.carrier.flavor is Flavor.CATEGORY:
        return [v for v in site.sieves(obj) if _factors(site, v, point)]
    return [v for v in site.sieves(obj) if v.members <= point.kernel]


@dataclass(frozen=True)
class NeighborhoodSystem:
    """
    The 𝔊-neighborhoods of a point and the sieves containing one.

    ``filtered`` records the filtered-object axioms on ``cover_nbhds``; a
    point with no 𝔊-neighborhood is blind and every filter converges to it.
    """

    site: CoverAssignment
    obj: str
    point: Point
    g_nbhds: tuple[Sieve, ...]
    cover_nbhds: tuple[Sieve, ...]
    filtered: Verdict

    @property
    def blind(self) -> bool:
        return not self.g_nbhds

    def to_dict(self) -> dict[str, Any]:
        render = self.site.carrier.render
        return {
            "object": self.obj,
            "point": point_to_dict(self.point),
            "g_neighborhoods": [render(s) for s in self.g_nbhds],
            "cover_neighborhoods": [render(s) for s in self.cover_nbhds],
            "filtered": self.filtered.to_dict(),
            "blind": self.blind,
        }


def _filtered_object(site: CoverAssignment, obj: str, sieves: frozenset[Sieve]) -> Verdict:
    carrier = site.carrier
    ordered = sorted(sieves, key=carrier.sieve_key)
    for sieve in ordered:
        if sieve.is_empty:
            return Verdict.fail("empty-sieve", object=obj)
        for candidate in carrier.sieves_on(obj):
            if sieve <= candidate and candidate not in sieves:
                return Verdict.fail(
                    "upward-closure",
                    object=obj,
                    sieve=carrier.render(sieve),
                    superset=carrier.render(candidate),
                )
    for i, first in enumerate(ordered):
        for second in ordered[i + 1 :]:
            if first & second not in sieves:
                return Verdict.fail(
                    "intersection",
                    object=obj,
                    sieves=[carrier.render(first), carrier.render(second)],
                )
    return Verdict.ok()


def neighborhood_system(site: CoverAssignment, obj: str, point: Point) -> NeighborhoodSystem:
    """
    Compute 𝔊-neighborhoods and the cover-neighborhood system.

    Raises:
        PointMismatch: If the point does not belong to obj
    """
    g_nbhds = g_neighborhoods(site, obj, point)
    cover = upward_closure(site.carrier, obj, g_nbhds)
    filtered = _filtered_object(site, obj, cover) if g_nbhds else Verdict.ok()
    return NeighborhoodSystem(
        site=site,
        obj=obj,
        point=point,
        g_nbhds=tuple(g_nbhds),
        cover_nbhds=tuple(sorted(cover, key=site.carrier.sieve_key)),
        filtered=filtered,
    )
