"""
Finite small categories given by explicit composition tables.
"""

import logging
import weakref
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product

from sieveforge.core.exceptions import (
    AssociativityViolation,
    CompositionTypeError,
    IdentityViolation,
    MissingComposite,
    NoTerminalObject,
    UnknownObject,
    ValidationError,
)
from sieveforge.order.lattice import FiniteLattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Morphism:
    """A morphism record ``id: dom -> cod``."""

    id: str
    dom: str
    cod: str


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """
    A certified finite category.

    ``composition[(f, g)]`` is the composite f∘g ("g then f"), defined
    exactly when cod(g) = dom(f). Morphisms are kept in canonical order:
    identities in object order, then declared morphisms in declaration
    order. Instances compare by identity.
    """

    name: str
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identity: dict[str, str]
    composition: dict[tuple[str, str], str] = field(repr=False)
    lattice: FiniteLattice | None = field(default=None, repr=False)
    _by_id: dict[str, Morphism] = field(default_factory=dict, repr=False)
    _position: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_id.update({m.id: m for m in self.morphisms})
        self._position.update({m.id: i for i, m in enumerate(self.morphisms)})

    def morphism(self, morphism_id: str) -> Morphism:
        try:
            return self._by_id[morphism_id]
        except KeyError:
            raise UnknownObject(
                f"Unknown morphism in category {self.name}", details=repr(morphism_id)
            )

    def check_object(self, obj: str) -> str:
        if obj not in self.objects:
            raise UnknownObject(
                f"Unknown object in category {self.name}", details=repr(obj)
            )
        return obj

    def dom(self, morphism_id: str) -> str:
        return self.morphism(morphism_id).dom

    def cod(self, morphism_id: str) -> str:
        return self.morphism(morphism_id).cod

    def position(self, morphism_id: str) -> int:
        self.morphism(morphism_id)
        return self._position[morphism_id]

    def compose(self, f: str, g: str) -> str | None:
        """f∘g, or None when cod(g) != dom(f)."""
        return self.composition.get((f, g))

    def hom(self, source: str, target: str) -> list[str]:
        """Morphisms source -> target in canonical order."""
        self.check_object(source)
        self.check_object(target)
        return [m.id for m in self.morphisms if m.dom == source and m.cod == target]

    def arrows_into(self, target: str) -> list[str]:
        self.check_object(target)
        return [m.id for m in self.morphisms if m.cod == target]

    def factors_through(self, m: str, f: str) -> bool:
        """True iff m = f∘g for some g."""
        return any(
            self.compose(f, g) == m for g in self.hom(self.dom(m), self.dom(f))
        )


def build_category(
    objects: Sequence[str],
    morphisms: Iterable[tuple[str, str, str]],
    compositions: Iterable[tuple[str, str, str]] = (),
    identities: Mapping[str, str] | None = None,
    name: str = "C",
) -> FiniteCategory:
    """
    Build and certify a finite category.

    Composites involving an identity are filled in automatically; every
    other composable pair must be declared.

    Args:
        objects: Object identifiers in canonical order
        morphisms: Non-identity morphisms as (id, dom, cod)
        compositions: Entries (f, g, h) meaning f∘g = h
        identities: Optional object -> identity id map (default ``id_<obj>``)
        name: Display name

    Returns:
        Certified FiniteCategory

    Raises:
        UnknownObject: If an id is referenced but never declared
        CompositionTypeError: If an entry is not composable or mistyped
        IdentityViolation: If an entry contradicts an identity law
        MissingComposite: If a composable pair has no composite
        AssociativityViolation: If some composable triple breaks associativity
    """
    objects = tuple(str(o) for o in objects)
    if len(set(objects)) != len(objects):
        raise ValidationError("Duplicate object identifiers", details=name)
    identities = dict(identities or {})
    for obj in identities:
        if obj not in objects:
            raise UnknownObject(f"Identity declared for unknown object in {name}", details=obj)
    ident = {obj: identities.get(obj, f"id_{obj}") for obj in objects}

    records = [Morphism(ident[obj], obj, obj) for obj in objects]
    for morphism_id, dom, cod in morphisms:
        for obj in (dom, cod):
            if obj not in objects:
                raise UnknownObject(
                    f"Morphism {morphism_id} references an unknown object", details=obj
                )
        records.append(Morphism(str(morphism_id), str(dom), str(cod)))
    by_id: dict[str, Morphism] = {}
    for record in records:
        if record.id in by_id:
            raise ValidationError("Duplicate morphism identifier", details=record.id)
        by_id[record.id] = record

    def lookup(morphism_id: str) -> Morphism:
        if morphism_id not in by_id:
            raise UnknownObject(
                f"Composition references an unknown morphism in {name}",
                details=repr(morphism_id),
            )
        return by_id[morphism_id]

    table: dict[tuple[str, str], str] = {}
    for f, g, h in compositions:
        mf, mg, mh = lookup(f), lookup(g), lookup(h)
        if mg.cod != mf.dom:
            raise CompositionTypeError(
                f"{f}∘{g} is not composable",
                witness={"morphisms": [f, g]},
            )
        if mh.dom != mg.dom or mh.cod != mf.cod:
            raise CompositionTypeError(
                f"{f}∘{g} = {h} has the wrong type",
                details=f"expected {mg.dom} -> {mf.cod}, got {mh.dom} -> {mh.cod}",
                witness={"morphisms": [f, g, h]},
            )
        table[(mf.id, mg.id)] = mh.id

    for record in records:
        for key in ((record.id, ident[record.dom]), (ident[record.cod], record.id)):
            if key in table and table[key] != record.id:
                raise IdentityViolation(
                    f"Identity law fails for {record.id}",
                    details=f"{key[0]}∘{key[1]} = {table[key]}",
                    witness={"morphisms": [key[0], key[1], table[key]]},
                )
            table[key] = record.id

    for f, g in product(records, records):
        if g.cod == f.dom and (f.id, g.id) not in table:
            raise MissingComposite(
                f"Missing composite {f.id}∘{g.id}",
                witness={"morphisms": [f.id, g.id]},
            )

    for f, g, h in product(records, repeat=3):
        if g.cod != f.dom or h.cod != g.dom:
            continue
        left = table[(table[(f.id, g.id)], h.id)]
        right = table[(f.id, table[(g.id, h.id)])]
        if left != right:
            raise AssociativityViolation(
                f"Associativity fails for {f.id}, {g.id}, {h.id}",
                details=f"({f.id}∘{g.id})∘{h.id} = {left}, {f.id}∘({g.id}∘{h.id}) = {right}",
                witness={"morphisms": [f.id, g.id, h.id]},
            )

    logger.debug(f"Built category {name}: {len(objects)} objects, {len(records)} morphisms")
    return FiniteCategory(
        name=name,
        objects=objects,
        morphisms=tuple(records),
        identity=ident,
        composition=table,
    )


def arrow_id(lower: str, upper: str) -> str:
    """Identifier of the unique morphism lower -> upper in a poset category."""
    return f"{lower}->{upper}"


_poset_categories: "weakref.WeakKeyDictionary[FiniteLattice, FiniteCategory]" = (
    weakref.WeakKeyDictionary()
)


def poset_category(lattice: FiniteLattice) -> FiniteCategory:
    """
    Regard a lattice as a category: one morphism m -> k iff m <= k.

    Composition is forced, so the table is built directly. The result is
    cached per lattice so that sites and functors built from the same
    lattice share one carrier.

    Args:
        lattice: Source lattice

    Returns:
        FiniteCategory with ``lattice`` set to the source
    """
    if lattice in _poset_categories:
        return _poset_categories[lattice]
    elements = lattice.elements
    ident = {k: arrow_id(k, k) for k in elements}
    records = [Morphism(ident[k], k, k) for k in elements]
    for k in elements:
        for m in lattice.below(k):
            if m != k:
                records.append(Morphism(arrow_id(m, k), m, k))
    table = {}
    for f in records:
        for g in records:
            if g.cod == f.dom:
                table[(f.id, g.id)] = arrow_id(g.dom, f.cod)
    category = FiniteCategory(
        name=f"Cat({lattice.name})",
        objects=elements,
        morphisms=tuple(records),
        identity=ident,
        composition=table,
        lattice=lattice,
    )
    _poset_categories[lattice] = category
    return category


@dataclass(frozen=True)
class CatPoint:
    """A point p: 1 -> target out of the designated terminal object."""

    morphism: str
    terminal: str
    target: str

    @property
    def label(self) -> str:
        return self.morphism


def terminal_objects(category: FiniteCategory) -> list[str]:
    """Objects T with exactly one morphism X -> T for every object X."""
    return [
        t
        for t in category.objects
        if all(len(category.hom(x, t)) == 1 for x in category.objects)
    ]


def designated_terminal(category: FiniteCategory) -> str:
    """
    The canonical-order first terminal object.

    Raises:
        NoTerminalObject: If the category has none
    """
    terminals = terminal_objects(category)
    if not terminals:
        raise NoTerminalObject(f"Category {category.name} has no terminal object")
    return terminals[0]


def category_points(category: FiniteCategory, obj: str) -> list[CatPoint]:
    """
    All points 1 -> obj relative to the designated terminal object.

    Raises:
        NoTerminalObject: If the category has no terminal object
        UnknownObject: If obj is not an object
    """
    category.check_object(obj)
    terminal = designated_terminal(category)
    return [CatPoint(f, terminal, obj) for f in category.hom(terminal, obj)]
