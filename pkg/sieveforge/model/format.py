"""
The model file format.

A model file is a sequence of blocks::

    lattice CHAIN3
      elements 0 1 2
      order 0 < 1 < 2
    end

    category TWOPT
      objects 1 C
      morphism x : 1 -> C
      compose t x = id_1
    end

    topology J on CHAIN3
      at 2 : {0 1 2} {0 1}
      at 1 : {0 1}
    end

    functor F : TWOPT -> TWOPT
      object C -> C
      morphism x -> y
    end

    point p on CHAIN3
      dual 1 2
    end

Blank lines and ``#`` comments are ignored. ``compose f g = h`` means
f∘g = h. Identities are ``id_<object>`` unless declared with
``identity OBJ = ID``. A category block may instead say ``poset L``; a
lattice block may say ``divisors N``; a topology block may say
``standard trivial|discrete|atomic|dense`` or ``sup``; a functor block
with the ``monotone`` flag maps lattice elements.
"""

import dataclasses
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

from sieveforge.category.category import (
    CatPoint,
    FiniteCategory,
    build_category,
    designated_terminal,
    poset_category,
)
from sieveforge.convergence.points import locale_points
from sieveforge.core.exceptions import (
    ModelSyntaxError,
    SieveForgeError,
    UnresolvedReference,
    ValidationError,
)
from sieveforge.coverage.assignment import CoverAssignment, cover_assignment
from sieveforge.coverage.topology import standard_assignment, sup_topology
from sieveforge.functors.functor import build_functor, monotone_functor
from sieveforge.order.lattice import FiniteLattice, build_lattice, divisor_lattice

logger = logging.getLogger(__name__)

_SIEVE = re.compile(r"\{([^{}]*)\}")


class BlockKind(Enum):
    """Kinds of model blocks."""

    LATTICE = "lattice"
    CATEGORY = "category"
    TOPOLOGY = "topology"
    FILTER = "filter"
    BASIS = "basis"
    SUBBASE = "subbase"
    FUNCTOR = "functor"
    POINT = "point"


ASSIGNMENT_KINDS = (BlockKind.TOPOLOGY, BlockKind.FILTER, BlockKind.BASIS, BlockKind.SUBBASE)


@dataclass
class ModelDocument:
    """One parsed block; ``body`` holds plain lists, strings and numbers."""

    kind: BlockKind
    name: str
    body: dict[str, Any]
    line: int = field(default=0, compare=False)


@dataclass
class ModelFile:
    """Ordered documents plus the objects they resolve to."""

    documents: list[ModelDocument]
    namespace: dict[str, Any] = field(default_factory=dict)

    def document(self, name: str) -> ModelDocument:
        for doc in self.documents:
            if doc.name == name:
                return doc
        raise UnresolvedReference(f"No block named {name!r}")

    def names(self, *kinds: BlockKind) -> list[str]:
        return [d.name for d in self.documents if not kinds or d.kind in kinds]

    def get(self, name: str) -> Any:
        if name not in self.namespace:
            raise UnresolvedReference(f"No block named {name!r}")
        return self.namespace[name]

    def pick(self, kinds: tuple[BlockKind, ...], name: str | None = None) -> tuple[str, Any]:
        """
        The named block of one of ``kinds``, or the only such block.

        Raises:
            UnresolvedReference: If the name is unknown, of the wrong kind,
                or omitted while the choice is ambiguous
        """
        candidates = self.names(*kinds)
        wanted = "/".join(k.value for k in kinds)
        if name is None:
            if len(candidates) != 1:
                raise UnresolvedReference(
                    f"Expected exactly one {wanted} block, found {len(candidates)}",
                    details=", ".join(candidates) or None,
                )
            name = candidates[0]
        if name not in candidates:
            raise UnresolvedReference(f"No {wanted} block named {name!r}")
        return name, self.namespace[name]


def _column(raw: str, token: str) -> int:
    position = raw.find(token)
    return position + 1 if position >= 0 else 1


def _expect(condition: bool, message: str, line: int, raw: str, token: str = "") -> None:
    if not condition:
        raise ModelSyntaxError(message, line, _column(raw, token) if token else 1)


def _parse_sieves(text: str, line: int, raw: str) -> list[list[str]]:
    leftover = _SIEVE.sub(" ", text).strip()
    _expect(not leftover, f"Unexpected text in sieve list: {leftover!r}", line, raw, leftover)
    return [match.group(1).split() for match in _SIEVE.finditer(text)]


def _header(tokens: list[str], line: int, raw: str) -> tuple[BlockKind, str, dict[str, Any]]:
    try:
        kind = BlockKind(tokens[0])
    except ValueError:
        raise ModelSyntaxError(f"Unknown block keyword {tokens[0]!r}", line, _column(raw, tokens[0]))
    _expect(len(tokens) >= 2, f"{kind.value} block needs a name", line, raw)
    name = tokens[1]
    if kind in (BlockKind.LATTICE, BlockKind.CATEGORY):
        _expect(len(tokens) == 2, "Unexpected text after block name", line, raw, tokens[-1])
        return kind, name, {}
    if kind is BlockKind.FUNCTOR:
        _expect(
            len(tokens) == 6 and tokens[2] == ":" and tokens[4] == "->",
            "Expected 'functor NAME : SOURCE -> TARGET'",
            line,
            raw,
        )
        return kind, name, {"source": tokens[3], "target": tokens[5]}
    _expect(
        len(tokens) == 4 and tokens[2] == "on",
        f"Expected '{kind.value} NAME on TARGET'",
        line,
        raw,
    )
    return kind, name, {"on": tokens[3]}


def _body_line(doc: ModelDocument, tokens: list[str], line: int, raw: str) -> None:
    body = doc.body
    keyword = tokens[0]
    kind = doc.kind

    if kind is BlockKind.LATTICE:
        if keyword == "elements":
            body.setdefault("elements", []).extend(tokens[1:])
        elif keyword == "order":
            chain = tokens[1::2]
            _expect(
                len(tokens) >= 4 and all(t == "<" for t in tokens[2::2]) and len(tokens) % 2 == 0,
                "Expected 'order a < b [< c ...]'",
                line,
                raw,
            )
            pairs = body.setdefault("order", [])
            pairs.extend([a, b] for a, b in zip(chain, chain[1:]))
        elif keyword == "divisors":
            _expect(len(tokens) == 2 and tokens[1].isdigit(), "Expected 'divisors N'", line, raw)
            body["divisors"] = int(tokens[1])
        else:
            raise ModelSyntaxError(f"Unknown lattice keyword {keyword!r}", line, _column(raw, keyword))

    elif kind is BlockKind.CATEGORY:
        if keyword == "objects":
            body.setdefault("objects", []).extend(tokens[1:])
        elif keyword == "morphism":
            _expect(
                len(tokens) == 6 and tokens[2] == ":" and tokens[4] == "->",
                "Expected 'morphism ID : DOM -> COD'",
                line,
                raw,
            )
            body.setdefault("morphisms", []).append([tokens[1], tokens[3], tokens[5]])
        elif keyword == "compose":
            _expect(
                len(tokens) == 5 and tokens[3] == "=", "Expected 'compose F G = H'", line, raw
            )
            body.setdefault("compose", []).append([tokens[1], tokens[2], tokens[4]])
        elif keyword == "identity":
            _expect(
                len(tokens) == 4 and tokens[2] == "=", "Expected 'identity OBJ = ID'", line, raw
            )
            body.setdefault("identities", []).append([tokens[1], tokens[3]])
        elif keyword == "poset":
            _expect(len(tokens) == 2, "Expected 'poset LATTICE'", line, raw)
            body["poset"] = tokens[1]
        else:
            raise ModelSyntaxError(f"Unknown category keyword {keyword!r}", line, _column(raw, keyword))

    elif kind in ASSIGNMENT_KINDS:
        if keyword == "at":
            _expect(len(tokens) >= 3 and tokens[2] == ":", "Expected 'at OBJ : {..} ...'", line, raw)
            rest = " ".join(tokens).split(":", 1)[1]
            body.setdefault("table", []).append([tokens[1], _parse_sieves(rest, line, raw)])
        elif keyword == "standard" and kind is BlockKind.TOPOLOGY:
            _expect(len(tokens) == 2, "Expected 'standard KIND'", line, raw)
            body["standard"] = tokens[1]
        elif keyword == "sup" and kind is BlockKind.TOPOLOGY:
            _expect(len(tokens) == 1, "Unexpected text after 'sup'", line, raw, tokens[-1])
            body["sup"] = True
        else:
            raise ModelSyntaxError(f"Unknown {kind.value} keyword {keyword!r}", line, _column(raw, keyword))

    elif kind is BlockKind.FUNCTOR:
        if keyword == "monotone":
            body["monotone"] = True
        elif keyword in ("object", "morphism", "element"):
            _expect(
                len(tokens) == 4 and tokens[2] == "->", f"Expected '{keyword} A -> B'", line, raw
            )
            key = "morphisms" if keyword == "morphism" else "objects"
            body.setdefault(key, []).append([tokens[1], tokens[3]])
        else:
            raise ModelSyntaxError(f"Unknown functor keyword {keyword!r}", line, _column(raw, keyword))

    else:
        if keyword == "morphism":
            _expect(len(tokens) == 2, "Expected 'morphism ID'", line, raw)
            body["morphism"] = tokens[1]
        elif keyword == "dual":
            body.setdefault("dual", []).extend(tokens[1:])
        else:
            raise ModelSyntaxError(f"Unknown point keyword {keyword!r}", line, _column(raw, keyword))


def parse_documents(text: str) -> list[ModelDocument]:
    """
    Parse model text into documents without resolving them.

    Raises:
        ModelSyntaxError: On malformed input, with line and column
    """
    documents: list[ModelDocument] = []
    current: ModelDocument | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if current is None:
            kind, name, body = _header(tokens, number, raw)
            current = ModelDocument(kind, name, body, number)
        elif tokens == ["end"]:
            documents.append(current)
            current = None
        else:
            _body_line(current, tokens, number, raw)
    if current is not None:
        raise ModelSyntaxError(
            f"Block {current.name!r} is missing 'end'", len(text.splitlines()) + 1
        )
    return documents


def _lookup(namespace: dict[str, Any], name: str, kinds: tuple[type, ...], doc: ModelDocument) -> Any:
    if name not in namespace or not isinstance(namespace[name], kinds):
        raise UnresolvedReference(
            f"{doc.kind.value} {doc.name} references unknown {name!r}",
            details=f"line {doc.line}",
        )
    return namespace[name]


def _resolve(doc: ModelDocument, namespace: dict[str, Any]) -> Any:
    body = doc.body
    if doc.kind is BlockKind.LATTICE:
        if "divisors" in body:
            return dataclasses.replace(divisor_lattice(body["divisors"]), name=doc.name)
        return build_lattice(body.get("elements", []), body.get("order", []), name=doc.name)

    if doc.kind is BlockKind.CATEGORY:
        if "poset" in body:
            return poset_category(_lookup(namespace, body["poset"], (FiniteLattice,), doc))
        return build_category(
            body.get("objects", []),
            body.get("morphisms", []),
            body.get("compose", []),
            dict(body.get("identities", [])),
            name=doc.name,
        )

    if doc.kind in ASSIGNMENT_KINDS:
        structure = _lookup(namespace, body["on"], (FiniteLattice, FiniteCategory), doc)
        if "standard" in body:
            return dataclasses.replace(
                standard_assignment(body["standard"], structure), name=doc.name
            )
        if "sup" in body:
            if not isinstance(structure, FiniteLattice):
                raise ValidationError(f"{doc.name}: 'sup' needs a lattice, got {body['on']}")
            return dataclasses.replace(sup_topology(structure), name=doc.name)
        return cover_assignment(structure, dict(body.get("table", [])), name=doc.name)

    if doc.kind is BlockKind.FUNCTOR:
        objects = dict(body.get("objects", []))
        if body.get("monotone"):
            source = _lookup(namespace, body["source"], (FiniteLattice,), doc)
            target = _lookup(namespace, body["target"], (FiniteLattice,), doc)
            return monotone_functor(source, target, objects, name=doc.name)
        source = _lookup(namespace, body["source"], (FiniteCategory,), doc)
        target = _lookup(namespace, body["target"], (FiniteCategory,), doc)
        return build_functor(source, target, objects, dict(body.get("morphisms", [])), doc.name)

    structure = _lookup(namespace, body["on"], (FiniteLattice, FiniteCategory), doc)
    if isinstance(structure, FiniteCategory):
        morphism = structure.morphism(body.get("morphism", ""))
        terminal = designated_terminal(structure)
        if morphism.dom != terminal:
            raise ValidationError(
                f"point {doc.name}: {morphism.id} does not start at the terminal object {terminal}"
            )
        return CatPoint(morphism.id, terminal, morphism.cod)
    dual = frozenset(body.get("dual", []))
    for point in locale_points(structure):
        if point.dual_kernel == dual:
            return point
    raise ValidationError(
        f"point {doc.name}: {sorted(dual)} is not a prime filter of {structure.name}"
    )


def resolve_documents(documents: list[ModelDocument]) -> ModelFile:
    """
    Build library objects for every document, in order.

    Raises:
        UnresolvedReference: If a block references an undeclared name
        ValidationError: If a block fails its structural checks
    """
    namespace: dict[str, Any] = {}
    for doc in documents:
        if doc.name in namespace:
            raise ValidationError(f"Duplicate block name {doc.name!r}", details=f"line {doc.line}")
        try:
            namespace[doc.name] = _resolve(doc, namespace)
        except SieveForgeError:
            logger.debug(f"Failed to resolve {doc.kind.value} {doc.name} (line {doc.line})")
            raise
    return ModelFile(documents, namespace)


def parse_model(text: str) -> ModelFile:
    """
    Parse and resolve model text.

    Raises:
        ModelSyntaxError: On malformed input
        UnresolvedReference: On dangling references
        ValidationError: If a declared structure is invalid
    """
    return resolve_documents(parse_documents(text))


def load_model(path: str | Path) -> ModelFile:
    """
    Read and parse a UTF-8 model file.

    Raises:
        SieveForgeError: If the file cannot be read
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SieveForgeError(f"Cannot read model file {path}", details=str(e))
    return parse_model(text)


def _sieves(groups: list[list[str]]) -> str:
    return " ".join("{" + " ".join(members) + "}" for members in groups)


def serialize_document(doc: ModelDocument) -> str:
    """Text of a single block."""
    body = doc.body
    if doc.kind in (BlockKind.LATTICE, BlockKind.CATEGORY):
        lines = [f"{doc.kind.value} {doc.name}"]
    elif doc.kind is BlockKind.FUNCTOR:
        lines = [f"functor {doc.name} : {body['source']} -> {body['target']}"]
    else:
        lines = [f"{doc.kind.value} {doc.name} on {body['on']}"]

    if doc.kind is BlockKind.LATTICE:
        if "divisors" in body:
            lines.append(f"  divisors {body['divisors']}")
        if body.get("elements"):
            lines.append("  elements " + " ".join(body["elements"]))
        lines.extend(f"  order {a} < {b}" for a, b in body.get("order", []))
    elif doc.kind is BlockKind.CATEGORY:
        if "poset" in body:
            lines.append(f"  poset {body['poset']}")
        if body.get("objects"):
            lines.append("  objects " + " ".join(body["objects"]))
        lines.extend(f"  identity {o} = {i}" for o, i in body.get("identities", []))
        lines.extend(f"  morphism {m} : {d} -> {c}" for m, d, c in body.get("morphisms", []))
        lines.extend(f"  compose {f} {g} = {h}" for f, g, h in body.get("compose", []))
    elif doc.kind in ASSIGNMENT_KINDS:
        if "standard" in body:
            lines.append(f"  standard {body['standard']}")
        if body.get("sup"):
            lines.append("  sup")
        lines.extend(f"  at {obj} : {_sieves(groups)}".rstrip() for obj, groups in body.get("table", []))
    elif doc.kind is BlockKind.FUNCTOR:
        if body.get("monotone"):
            lines.append("  monotone")
        word = "element" if body.get("monotone") else "object"
        lines.extend(f"  {word} {a} -> {b}" for a, b in body.get("objects", []))
        lines.extend(f"  morphism {a} -> {b}" for a, b in body.get("morphisms", []))
    else:
        if "morphism" in body:
            lines.append(f"  morphism {body['morphism']}")
        if "dual" in body:
            lines.append("  dual " + " ".join(body["dual"]))
    lines.append("end")
    return "\n".join(lines)


def serialize_model(model: ModelFile | list[ModelDocument]) -> str:
    """Model text whose parse yields the same documents."""
    documents = model.documents if isinstance(model, ModelFile) else model
    return "\n\n".join(serialize_document(doc) for doc in documents) + "\n"


def lattice_document(lattice: FiniteLattice, name: str | None = None) -> ModelDocument:
    """Document for a lattice, ordered by its covering pairs."""
    return ModelDocument(
        BlockKind.LATTICE,
        name or lattice.name,
        {
            "elements": list(lattice.elements),
            "order": [list(pair) for pair in lattice.covering_pairs()],
        },
    )


def category_document(category: FiniteCategory, name: str | None = None) -> ModelDocument:
    """Document for a category; poset categories refer back to their lattice."""
    if category.lattice is not None:
        return ModelDocument(BlockKind.CATEGORY, name or category.name, {"poset": category.lattice.name})
    identities = set(category.identity.values())
    body: dict[str, Any] = {
        "objects": list(category.objects),
        "morphisms": [
            [m.id, m.dom, m.cod] for m in category.morphisms if m.id not in identities
        ],
        "compose": [
            [f, g, h]
            for (f, g), h in category.composition.items()
            if f not in identities and g not in identities
        ],
    }
    custom = [[o, i] for o, i in category.identity.items() if i != f"id_{o}"]
    if custom:
        body["identities"] = custom
    return ModelDocument(BlockKind.CATEGORY, name or category.name, body)


def assignment_document(
    kind: BlockKind, name: str, assignment: CoverAssignment, on: str | None = None
) -> ModelDocument:
    """Document listing every nonempty table entry explicitly."""
    carrier = assignment.carrier
    table = [
        [obj, [carrier.render(s) for s in assignment.sieves(obj)]]
        for obj in carrier.objects
        if assignment[obj]
    ]
    return ModelDocument(kind, name, {"on": on or carrier.name, "table": table})

