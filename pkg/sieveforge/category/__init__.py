"""Finite categories, sieves and the carrier adapter."""

from sieveforge.category.carrier import (
    Carrier,
    CategoryCarrier,
    Flavor,
    LocaleCarrier,
    carrier_of,
    generated_sieve,
    is_sieve,
    maximal_sieve,
    principal_sieve,
    pullback_sieve,
    sieves_on,
)
from sieveforge.category.category import (
    CatPoint,
    FiniteCategory,
    Morphism,
    arrow_id,
    build_category,
    category_points,
    designated_terminal,
    poset_category,
    terminal_objects,
)
from sieveforge.category.sieves import Sieve

__all__ = [
    "Carrier",
    "CatPoint",
    "CategoryCarrier",
    "FiniteCategory",
    "Flavor",
    "LocaleCarrier",
    "Morphism",
    "Sieve",
    "arrow_id",
    "build_category",
    "carrier_of",
    "category_points",
    "designated_terminal",
    "generated_sieve",
    "is_sieve",
    "maximal_sieve",
    "poset_category",
    "principal_sieve",
    "pullback_sieve",
    "sieves_on",
    "terminal_objects",
]
