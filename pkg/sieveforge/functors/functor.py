"""
Functors between finite categories and the generated image sieve ⟨F(R)⟩.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from sieveforge.category.carrier import carrier_of
from sieveforge.category.category import FiniteCategory, arrow_id, poset_category
from sieveforge.category.sieves import Sieve
from sieveforge.core.exceptions import (
    CarrierMismatch,
    NotAFunctor,
    OwnerMismatch,
    UnknownObject,
)
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.filters.axioms import FilterCertificate, as_assignment
from sieveforge.order.lattice import FiniteLattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FunctorMap:
    """A certified functor between finite categories."""

    name: str
    source: FiniteCategory
    target: FiniteCategory
    object_map: dict[str, str]
    morphism_map: dict[str, str]
    _factorizations: dict[tuple[str, str], bool] = field(default_factory=dict, repr=False)

    def on_object(self, obj: str) -> str:
        return self.object_map[self.source.check_object(obj)]

    def on_morphism(self, morphism: str) -> str:
        self.source.morphism(morphism)
        return self.morphism_map[morphism]

    def factors(self, m: str, f: str) -> bool:
        """m = f∘g for some g in the target; memoized."""
        key = (m, f)
        if key not in self._factorizations:
            self._factorizations[key] = self.target.factors_through(m, f)
        return self._factorizations[key]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "source": self.source.name,
            "target": self.target.name,
            "objects": dict(self.object_map),
            "morphisms": dict(self.morphism_map),
        }


def build_functor(
    source: FiniteCategory,
    target: FiniteCategory,
    object_map: Mapping[str, str],
    morphism_map: Mapping[str, str] | None = None,
    name: str = "F",
) -> FunctorMap:
    """
    Build and certify a functor.

    Identities absent from ``morphism_map`` are sent to the identity of the
    image object.

    Args:
        source: Domain category
        target: Codomain category
        object_map: Source object -> target object (total)
        morphism_map: Source morphism -> target morphism
        name: Display name

    Returns:
        Certified FunctorMap

    Raises:
        UnknownObject: If an id does not resolve
        NotAFunctor: If typing, identities or composition are not preserved
    """
    objects = {}
    for obj in source.objects:
        if obj not in object_map:
            raise NotAFunctor(f"{name} has no image for object {obj}", witness={"object": obj})
        objects[obj] = target.check_object(object_map[obj])
    for obj in object_map:
        source.check_object(obj)

    morphisms = dict(morphism_map or {})
    for obj in source.objects:
        morphisms.setdefault(source.identity[obj], target.identity[objects[obj]])
    for f, image in morphisms.items():
        source.morphism(f)
        target.morphism(image)
    for record in source.morphisms:
        if record.id not in morphisms:
            raise NotAFunctor(
                f"{name} has no image for morphism {record.id}",
                witness={"morphism": record.id},
            )
        image = target.morphism(morphisms[record.id])
        if image.dom != objects[record.dom] or image.cod != objects[record.cod]:
            raise NotAFunctor(
                f"{name}({record.id}) has the wrong type",
                details=f"expected {objects[record.dom]} -> {objects[record.cod]}",
                witness={"morphism": record.id, "image": image.id},
            )

    for obj in source.objects:
        if morphisms[source.identity[obj]] != target.identity[objects[obj]]:
            raise NotAFunctor(
                f"{name} does not preserve the identity of {obj}",
                witness={"morphism": source.identity[obj]},
            )

    for (f, g), composite in source.composition.items():
        expected = target.compose(morphisms[f], morphisms[g])
        if morphisms[composite] != expected:
            raise NotAFunctor(
                f"{name} does not preserve {f}∘{g}",
                details=f"{name}({composite}) = {morphisms[composite]}, expected {expected}",
                witness={"morphisms": [f, g, composite]},
            )

    logger.debug(f"Certified functor {name}: {source.name} -> {target.name}")
    return FunctorMap(name, source, target, objects, morphisms)


def monotone_functor(
    source: FiniteLattice,
    target: FiniteLattice,
    element_map: Mapping[str, str],
    name: str = "F",
) -> FunctorMap:
    """
    The functor of poset categories induced by a monotone map.

    Raises:
        NotAFunctor: If the map is not monotone
    """
    for x in source.elements:
        for y in source.above(x):
            fx, fy = element_map.get(x), element_map.get(y)
            if fx is None or fy is None:
                raise NotAFunctor(f"{name} is not total", witness={"element": x if fx is None else y})
            if not target.le(fx, fy):
                raise NotAFunctor(
                    f"{name} is not monotone",
                    details=f"{x} <= {y} but {fx} !<= {fy}",
                    witness={"elements": [x, y]},
                )
    source_category = poset_category(source)
    target_category = poset_category(target)
    morphisms = {
        record.id: arrow_id(element_map[record.dom], element_map[record.cod])
        for record in source_category.morphisms
    }
    return build_functor(source_category, target_category, element_map, morphisms, name)


def image_sieve(functor: FunctorMap, sieve: Sieve, obj: str | None = None) -> Sieve:
    """
    ⟨F(R)⟩: target morphisms into F(C) factoring through some F(f), f in R.

    Args:
        functor: Certified functor
        sieve: Sieve R on C in the source
        obj: Expected owner C (optional)

    Raises:
        OwnerMismatch: If R is not owned by ``obj`` or by a source object
    """
    if obj is not None and sieve.owner != obj:
        raise OwnerMismatch(f"Sieve owned by {sieve.owner}, expected {obj}")
    try:
        carrier_of(functor.source).sieve(sieve.owner, sieve.members)
    except UnknownObject as e:
        raise OwnerMismatch(f"Sieve is not on {functor.source.name}", details=str(e))
    owner = functor.on_object(sieve.owner)
    images = sorted({functor.on_morphism(f) for f in sieve.members}, key=functor.target.position)
    members = frozenset(
        m
        for m in functor.target.arrows_into(owner)
        if any(functor.factors(m, image) for image in images)
    )
    return Sieve(owner, members)


def is_filter_preserving(
    functor: FunctorMap,
    source: CoverAssignment | FilterCertificate,
    target: CoverAssignment | FilterCertificate,
) -> Verdict:
    """
    Check that ⟨F(R)⟩ ∈ 𝔊(F(c)) for every R ∈ 𝔉(c).

    The same check decides cover preservation between topologies.

    Returns:
        Verdict labelled ``image-membership`` with the failing (c, R)

    Raises:
        CarrierMismatch: If the assignments do not live on the functor's
            source and target
    """
    source, target = as_assignment(source), as_assignment(target)
    if source.carrier is not carrier_of(functor.source):
        raise CarrierMismatch(f"Source assignment is not on {functor.source.name}")
    if target.carrier is not carrier_of(functor.target):
        raise CarrierMismatch(f"Target assignment is not on {functor.target.name}")
    for obj in source.objects:
        for sieve in source.sieves(obj):
            image = image_sieve(functor, sieve)
            if image not in target[image.owner]:
                return Verdict.fail(
                    "image-membership",
                    object=obj,
                    sieve=source.carrier.render(sieve),
                    image=target.carrier.render(image),
                    image_object=image.owner,
                )
    return Verdict.ok()
