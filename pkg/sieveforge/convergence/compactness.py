"""
Quasi-compactness, Hausdorffness and compactness of an object, and the
Tychonoff check on locales.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from sieveforge.category.carrier import Flavor
from sieveforge.convergence.limits import cluster_points, limit_points
from sieveforge.convergence.neighborhoods import neighborhood_system
from sieveforge.convergence.points import Point, points_of
from sieveforge.core.exceptions import ImproperFilter, NotCompactInput, ValidationError
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.filters.generation import saturate_subbase
from sieveforge.filters.ultrafilters import enumerate_filters, enumerate_ultrafilters
from sieveforge.order.lattice import meet_of

logger = logging.getLogger(__name__)


class CompactnessMethod(Enum):
    """Decision procedure for compactness."""

    ULTRAFILTER = "ultrafilter"
    EXHAUSTIVE = "exhaustive"


@dataclass
class CompactnessReport:
    """Compactness verdicts for one object with replayable witnesses."""

    obj: str
    quasi_compact: bool
    hausdorff: bool
    method: CompactnessMethod
    points: list[Point] = field(default_factory=list)
    blind_points: list[Point] = field(default_factory=list)
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def compact(self) -> bool:
        return self.quasi_compact and self.hausdorff

    def to_dict(self) -> dict[str, Any]:
        return {
            "object": self.obj,
            "quasi_compact": self.quasi_compact,
            "hausdorff": self.hausdorff,
            "compact": self.compact,
            "method": self.method.value,
            "points": [p.label for p in self.points],
            "blind_points": [p.label for p in self.blind_points],
            "witnesses": self.witnesses,
        }


def _hausdorff_by_saturation(
    site: CoverAssignment, obj: str, points: list[Point], budget: int | None
) -> tuple[bool, dict[str, Any] | None]:
    # a filter converges to both p and q iff N_p ∪ N_q saturates properly
    for p, q in combinations(points, 2):
        together = set(neighborhood_system(site, obj, p).cover_nbhds)
        together |= set(neighborhood_system(site, obj, q).cover_nbhds)
        subbase = CoverAssignment(site.carrier, {obj: frozenset(together)}, "N_p ∪ N_q")
        try:
            both = saturate_subbase(subbase, budget)
        except ImproperFilter:
            continue
        return False, {"points": [p.label, q.label], "filter": both.to_dict()}
    return True, None


def compactness_report(
    site: CoverAssignment,
    obj: str,
    method: CompactnessMethod | str = CompactnessMethod.ULTRAFILTER,
    budget: int | None = None,
) -> CompactnessReport:
    """
    Decide quasi-compactness and Hausdorffness of obj.

    Ultrafilter method: quasi-compact iff every ultrafilter has a cluster
    point at obj; Hausdorff iff no two points share a proper filter
    converging to both. Exhaustive method: both quantify over every filter.

    Args:
        site: Cover assignment used for neighborhoods
        obj: Object or element
        method: ``ultrafilter`` or ``exhaustive``
        budget: Saturation budget (default from settings)

    Raises:
        BudgetExceeded: If an enumeration exceeds the budget
    """
    method = CompactnessMethod(method)
    site.carrier.check_object(obj)
    points = points_of(site, obj)
    blind = [p for p in points if neighborhood_system(site, obj, p).blind]
    witnesses: dict[str, Any] = {}

    if method is CompactnessMethod.ULTRAFILTER:
        quasi_compact = True
        for ultrafilter in enumerate_ultrafilters(site.carrier, budget):
            if not cluster_points(ultrafilter, obj, site):
                quasi_compact = False
                witnesses["clusterless_ultrafilter"] = ultrafilter.to_dict()
                break
        hausdorff, pair = _hausdorff_by_saturation(site, obj, points, budget)
        if pair:
            witnesses["two_limit_filter"] = pair
    else:
        quasi_compact, hausdorff = True, True
        for candidate in enumerate_filters(site.carrier, budget):
            if quasi_compact and not cluster_points(candidate, obj, site):
                quasi_compact = False
                witnesses["clusterless_filter"] = candidate.to_dict()
            if hausdorff:
                limits = limit_points(candidate, obj, site)
                if len(limits) > 1:
                    hausdorff = False
                    witnesses["two_limit_filter"] = {
                        "points": [p.label for p in limits[:2]],
                        "filter": candidate.to_dict(),
                    }
            if not (quasi_compact or hausdorff):
                break

    logger.debug(
        f"compactness of {obj} on {site.carrier.name} ({method.value}): "
        f"quasi_compact={quasi_compact} hausdorff={hausdorff}"
    )
    return CompactnessReport(
        obj=obj,
        quasi_compact=quasi_compact,
        hausdorff=hausdorff,
        method=method,
        points=points,
        blind_points=blind,
        witnesses=witnesses,
    )


def tychonoff_check(
    site: CoverAssignment,
    targets: list[str],
    method: CompactnessMethod | str = CompactnessMethod.ULTRAFILTER,
    budget: int | None = None,
) -> Verdict:
    """
    Check that the meet of compact elements is compact.

    Args:
        site: Locale site
        targets: Compact elements
        method: Compactness decision procedure

    Returns:
        Verdict labelled ``tychonoff`` with the meet and its report on failure

    Raises:
        ValidationError: If the site is not on a locale or targets is empty
        NotCompactInput: If some target is not compact
    """
    if site.carrier.flavor is not Flavor.LOCALE:
        raise ValidationError("Tychonoff check needs a locale site")
    if not targets:
        raise ValidationError("Tychonoff check needs at least one target")
    for target in targets:
        report = compactness_report(site, target, method, budget)
        if not report.compact:
            raise NotCompactInput(
                f"{target} is not compact", witness=report.to_dict()
            )
    meet = meet_of(site.carrier.structure, targets)
    report = compactness_report(site, meet, method, budget)
    if report.compact:
        return Verdict.ok()
    return Verdict.fail("tychonoff", targets=list(targets), meet=meet, report=report.to_dict())
