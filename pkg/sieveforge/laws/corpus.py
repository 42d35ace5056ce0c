"""
Fixture corpus for the law suite.

The named fixtures are kept as model text so the same source feeds the
library, the CLI and the serialization round trip. Random lattices are
produced by stacking antichains and closing transitively; candidates that
are not lattices are rejected.
"""

import functools
import logging

import numpy as np

from sieveforge.category.category import FiniteCategory
from sieveforge.core.exceptions import NotALattice, ValidationError
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.functors.functor import FunctorMap
from sieveforge.model.format import ModelFile, parse_model
from sieveforge.order.lattice import FiniteLattice, build_lattice, is_frame

logger = logging.getLogger(__name__)

FIXTURE_MODEL = """\
# Named fixtures

lattice CHAIN3
  elements 0 1 2
  order 0 < 1 < 2
end

lattice D12
  divisors 12
end

lattice SQ
  elements ⊥ a b ⊤
  order ⊥ < a < ⊤
  order ⊥ < b < ⊤
end

lattice M3
  elements ⊥ p q r ⊤
  order ⊥ < p < ⊤
  order ⊥ < q < ⊤
  order ⊥ < r < ⊤
end

category TWOPT
  objects 1 C
  morphism x : 1 -> C
  morphism y : 1 -> C
  morphism t : C -> 1
  morphism a : C -> C
  morphism b : C -> C
  compose t x = id_1
  compose t y = id_1
  compose t a = t
  compose t b = t
  compose x t = a
  compose y t = b
  compose a x = x
  compose a y = x
  compose a a = a
  compose a b = a
  compose b x = y
  compose b y = y
  compose b a = b
  compose b b = b
end

category POSET_CHAIN3
  poset CHAIN3
end

# J(C) in {t_C}, {t_C, <x>}, {t_C, <x>, <y>}
topology J1 on TWOPT
  at 1 : {id_1 t}
  at C : {id_C x y a b}
end

topology J2 on TWOPT
  at 1 : {id_1 t}
  at C : {id_C x y a b} {x a}
end

topology J3 on TWOPT
  at 1 : {id_1 t}
  at C : {id_C x y a b} {x a} {y b}
end

topology CHAIN3_TRIVIAL on CHAIN3
  standard trivial
end

topology CHAIN3_DENSE on CHAIN3
  standard dense
end

topology SQ_TRIVIAL on SQ
  standard trivial
end

topology SQ_DENSE on SQ
  standard dense
end

topology D12_TRIVIAL on D12
  standard trivial
end

topology D12_DENSE on D12
  standard dense
end

topology D12_SUP on D12
  sup
end

filter CHAIN3_F on CHAIN3
  at 0 : {0}
  at 1 : {0 1}
  at 2 : {0 1 2} {0 1}
end

functor SWAP : TWOPT -> TWOPT
  object 1 -> 1
  object C -> C
  morphism x -> y
  morphism y -> x
  morphism t -> t
  morphism a -> b
  morphism b -> a
end

functor IDENTITY : TWOPT -> TWOPT
  object 1 -> 1
  object C -> C
  morphism x -> x
  morphism y -> y
  morphism t -> t
  morphism a -> a
  morphism b -> b
end

functor COLLAPSE : CHAIN3 -> CHAIN3
  monotone
  element 0 -> 0
  element 1 -> 0
  element 2 -> 2
end

point PX on TWOPT
  morphism x
end

point UP2 on D12
  dual 2 4 6 12
end
"""

# topology blocks grouped by the structure they live on
CATEGORY_SITES = ("J1", "J2", "J3")
LOCALE_SITES = ("CHAIN3_TRIVIAL", "CHAIN3_DENSE", "SQ_TRIVIAL", "SQ_DENSE")
TYCHONOFF_SITES = ("D12_TRIVIAL", "D12_DENSE", "SQ_TRIVIAL", "SQ_DENSE")


@functools.cache
def fixture_model() -> ModelFile:
    """The parsed fixture corpus (built once per process)."""
    return parse_model(FIXTURE_MODEL)


def fixture(name: str):
    return fixture_model().get(name)


def lattice(name: str) -> FiniteLattice:
    value = fixture(name)
    if not isinstance(value, FiniteLattice):
        raise ValidationError(f"Fixture {name} is not a lattice")
    return value


def category(name: str) -> FiniteCategory:
    value = fixture(name)
    if not isinstance(value, FiniteCategory):
        raise ValidationError(f"Fixture {name} is not a category")
    return value


def site(name: str) -> CoverAssignment:
    value = fixture(name)
    if not isinstance(value, CoverAssignment):
        raise ValidationError(f"Fixture {name} is not an assignment")
    return value


def functor(name: str) -> FunctorMap:
    value = fixture(name)
    if not isinstance(value, FunctorMap):
        raise ValidationError(f"Fixture {name} is not a functor")
    return value


def fixture_lattices() -> list[FiniteLattice]:
    return [lattice(n) for n in ("CHAIN3", "D12", "SQ", "M3")]


def fixture_frames() -> list[FiniteLattice]:
    return [lattice(n) for n in ("CHAIN3", "D12", "SQ")]


def _stacked_candidate(rng: np.random.Generator, size: int) -> tuple[list[str], list[tuple[str, str]]]:
    elements = [f"e{i}" for i in range(size)]
    bottom, top = elements[0], elements[-1]
    pairs: list[tuple[str, str]] = []
    previous = [bottom]
    middle = elements[1:-1]
    while middle:
        width = int(rng.integers(1, len(middle) + 1))
        layer, middle = middle[:width], middle[width:]
        for element in layer:
            count = int(rng.integers(1, len(previous) + 1))
            below = rng.choice(len(previous), size=count, replace=False)
            pairs.extend((previous[int(i)], element) for i in sorted(below))
        previous = layer
    pairs.extend((e, top) for e in elements[:-1])
    return elements, pairs


def random_lattice(
    rng: np.random.Generator, max_elements: int, name: str = "R", max_attempts: int = 1000
) -> FiniteLattice:
    """
    A random bounded lattice with 2..max_elements elements.

    Raises:
        ValidationError: If no lattice turned up within max_attempts
    """
    for _ in range(max_attempts):
        size = int(rng.integers(2, max_elements + 1))
        elements, pairs = _stacked_candidate(rng, size)
        try:
            return build_lattice(elements, pairs, name=name)
        except NotALattice:
            continue
    raise ValidationError(f"No random lattice after {max_attempts} attempts")


def random_lattices(seed: int, count: int, max_elements: int, frames_only: bool = False) -> list[FiniteLattice]:
    """
    Seeded family of random lattices (locales when ``frames_only``).
    """
    rng = np.random.default_rng(seed)
    prefix = "RL" if frames_only else "RP"
    found: list[FiniteLattice] = []
    while len(found) < count:
        candidate = random_lattice(rng, max_elements, name=f"{prefix}{len(found)}")
        if frames_only and not is_frame(candidate).passed:
            continue
        found.append(candidate)
    logger.debug(f"Generated {len(found)} random {'locales' if frames_only else 'lattices'}")
    return found
