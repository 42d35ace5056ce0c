"""Functors of sites and their image laws."""

from sieveforge.functors.functor import (
    FunctorMap,
    build_functor,
    image_sieve,
    is_filter_preserving,
    monotone_functor,
)
from sieveforge.functors.image_laws import (
    ImageLawReport,
    compactness_preservation,
    image_basis,
    image_law_report,
)

__all__ = [
    "FunctorMap",
    "ImageLawReport",
    "build_functor",
    "compactness_preservation",
    "image_basis",
    "image_law_report",
    "image_sieve",
    "is_filter_preserving",
    "monotone_functor",
]
