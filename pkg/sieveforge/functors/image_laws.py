"""
Behaviour of neighborhoods, cover-neighborhoods, filter bases and
compactness under a functor of sites.

A morphism of sites is read as a certified functor that preserves covers
(``is_filter_preserving`` between the topologies) and sends the designated
terminal object to a terminal object.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from sieveforge.category.carrier import carrier_of
from sieveforge.category.category import CatPoint, designated_terminal, terminal_objects
from sieveforge.convergence.compactness import CompactnessMethod, compactness_report
from sieveforge.convergence.neighborhoods import g_neighborhoods, neighborhood_system
from sieveforge.convergence.points import points_of
from sieveforge.core.exceptions import (
    NoTerminalObject,
    PointMismatch,
    PreconditionUnmet,
    SieveForgeError,
)
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment, assignment_from
from sieveforge.filters.axioms import FilterCertificate, as_assignment, check_basis
from sieveforge.functors.functor import FunctorMap, image_sieve, is_filter_preserving

logger = logging.getLogger(__name__)

INTERPRETATION = (
    "morphism of sites = certified functor, cover-preserving between the "
    "topologies, designated terminal sent to a terminal object; no "
    "inclusion preservation beyond functoriality is assumed"
)


@dataclass
class ImageLawReport:
    """The three image statements plus the precondition verdicts."""

    neighborhoods: Verdict
    cover_neighborhoods: Verdict
    bases: Verdict
    preconditions: dict[str, Verdict] = field(default_factory=dict)
    interpretation: str = INTERPRETATION

    @property
    def passed(self) -> bool:
        return self.neighborhoods.passed and self.cover_neighborhoods.passed and self.bases.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "neighborhoods": self.neighborhoods.to_dict(),
            "cover_neighborhoods": self.cover_neighborhoods.to_dict(),
            "bases": self.bases.to_dict(),
            "preconditions": {k: v.to_dict() for k, v in self.preconditions.items()},
            "interpretation": self.interpretation,
        }


def _terminal_preserved(functor: FunctorMap) -> Verdict:
    try:
        terminal = designated_terminal(functor.source)
    except NoTerminalObject:
        return Verdict.fail("terminal", reason="source has no terminal object")
    image = functor.on_object(terminal)
    if image not in terminal_objects(functor.target):
        return Verdict.fail("terminal", object=terminal, image=image)
    return Verdict.ok()


def _image_point(functor: FunctorMap, point: CatPoint) -> CatPoint:
    """
    F(p) as a point of the target, read from its designated terminal through
    the unique arrow into F(1).

    Raises:
        NoTerminalObject: If the target has no terminal object
        PointMismatch: If F(1) does not receive exactly one arrow from it
    """
    target = functor.target
    terminal = designated_terminal(target)
    image_terminal = functor.on_object(point.terminal)
    morphism = functor.on_morphism(point.morphism)
    if image_terminal != terminal:
        arrows = target.hom(terminal, image_terminal)
        if len(arrows) != 1:
            raise PointMismatch(
                f"No unique arrow {terminal} -> {image_terminal}",
                details=f"{len(arrows)} arrows",
            )
        morphism = target.compose(morphism, arrows[0])
    return CatPoint(morphism, terminal, functor.on_object(point.target))


def _untransported(axiom: str, obj: str, point: CatPoint, error: SieveForgeError) -> Verdict:
    return Verdict.fail(axiom, object=obj, point=point.morphism, reason=error.message)


def _source_points(site: CoverAssignment, obj: str) -> list[CatPoint]:
    try:
        return points_of(site, obj)
    except NoTerminalObject:
        return []


def _neighborhood_law(
    functor: FunctorMap, source_site: CoverAssignment, target_site: CoverAssignment
) -> Verdict:
    render_source = source_site.carrier.render
    for obj in functor.source.objects:
        image_obj = functor.on_object(obj)
        for point in _source_points(source_site, obj):
            try:
                image_point = _image_point(functor, point)
            except (NoTerminalObject, PointMismatch) as e:
                return _untransported("neighborhood-image", obj, point, e)
            image_nbhds = g_neighborhoods(target_site, image_obj, image_point)
            for v in g_neighborhoods(source_site, obj, point):
                image = image_sieve(functor, v)
                if image not in image_nbhds:
                    return Verdict.fail(
                        "neighborhood-image",
                        object=obj,
                        point=point.morphism,
                        sieve=render_source(v),
                        image=target_site.carrier.render(image),
                    )
    return Verdict.ok()


def _cover_neighborhood_law(
    functor: FunctorMap, source_site: CoverAssignment, target_site: CoverAssignment
) -> Verdict:
    render_source = source_site.carrier.render
    for obj in functor.source.objects:
        image_obj = functor.on_object(obj)
        for point in _source_points(source_site, obj):
            try:
                image_point = _image_point(functor, point)
            except (NoTerminalObject, PointMismatch) as e:
                return _untransported("cover-neighborhood-image", obj, point, e)
            target_system = set(
                neighborhood_system(target_site, image_obj, image_point).cover_nbhds
            )
            for n in neighborhood_system(source_site, obj, point).cover_nbhds:
                image = image_sieve(functor, n)
                if image not in target_system:
                    return Verdict.fail(
                        "cover-neighborhood-image",
                        object=obj,
                        point=point.morphism,
                        sieve=render_source(n),
                        image=target_site.carrier.render(image),
                    )
    return Verdict.ok()


def image_basis(functor: FunctorMap, basis: CoverAssignment) -> CoverAssignment:
    """
    {⟨F(R)⟩ : R ∈ 𝔅(C), F(C) = D} at each D in the image; the maximal
    sieve elsewhere.
    """
    target = carrier_of(functor.target)
    table: dict[str, set] = {obj: set() for obj in target.objects}
    for obj in basis.objects:
        for sieve in basis[obj]:
            image = image_sieve(functor, sieve)
            table[image.owner].add(image)
    for obj, sieves in table.items():
        if not sieves:
            sieves.add(target.maximal(obj))
    return CoverAssignment(target, {k: frozenset(v) for k, v in table.items()}, "image_basis")


def image_law_report(
    functor: FunctorMap,
    source_site: CoverAssignment,
    target_site: CoverAssignment,
    source_basis: CoverAssignment | FilterCertificate | None = None,
    require_morphism_of_sites: bool = True,
) -> ImageLawReport:
    """
    Replay the image statements for neighborhoods, cover-neighborhoods and
    filter bases.

    Args:
        functor: Certified functor
        source_site: Topology on the source
        target_site: Topology on the target
        source_basis: Basis whose image is checked (default: the source
            site when it is a basis, else the trivial basis)
        require_morphism_of_sites: Raise when the functor is not a morphism
            of sites instead of reporting it

    Raises:
        PreconditionUnmet: If required and covers or the terminal object
            are not preserved, or the source basis is not a basis
    """
    if source_basis is not None:
        basis = as_assignment(source_basis)
    elif check_basis(source_site, strict=False).passed:
        basis = source_site
    else:
        basis = assignment_from(functor.source, lambda c, obj: [c.maximal(obj)])
    preconditions = {
        "cover-preserving": is_filter_preserving(functor, source_site, target_site),
        "terminal-preserving": _terminal_preserved(functor),
        "source-basis": check_basis(basis, strict=False),
    }
    failed = {k: v for k, v in preconditions.items() if not v.passed}
    if failed and require_morphism_of_sites:
        raise PreconditionUnmet(
            f"{functor.name} is not a morphism of sites",
            details=", ".join(failed),
            witness={k: v.to_dict() for k, v in failed.items()},
        )
    report = ImageLawReport(
        neighborhoods=_neighborhood_law(functor, source_site, target_site),
        cover_neighborhoods=_cover_neighborhood_law(functor, source_site, target_site),
        bases=check_basis(image_basis(functor, basis), strict=False),
        preconditions=preconditions,
    )
    logger.debug(f"image laws for {functor.name}: passed={report.passed}")
    return report


def compactness_preservation(
    functor: FunctorMap,
    source_site: CoverAssignment,
    target_site: CoverAssignment,
    objects: list[str] | None = None,
    method: CompactnessMethod | str = CompactnessMethod.ULTRAFILTER,
) -> Verdict:
    """
    Compact source objects must have compact images.

    Returns:
        Verdict labelled ``compactness-preservation`` with both reports
    """
    for obj in objects if objects is not None else functor.source.objects:
        source_report = compactness_report(source_site, obj, method)
        if not source_report.compact:
            continue
        image = functor.on_object(obj)
        target_report = compactness_report(target_site, image, method)
        if not target_report.compact:
            return Verdict.fail(
                "compactness-preservation",
                object=obj,
                image=image,
                source_report=source_report.to_dict(),
                target_report=target_report.to_dict(),
            )
    return Verdict.ok()
