"""Filters, bases, subbases and ultrafilters."""

from sieveforge.filters.axioms import (
    CertifiedAs,
    FilterCertificate,
    as_assignment,
    certify_basis,
    certify_filter,
    check_basis,
    check_filter,
    check_subbase,
)
from sieveforge.filters.generation import (
    SaturationKernel,
    filter_from_basis,
    filter_generators,
    is_finer,
    meet_filters,
    saturate_subbase,
)
from sieveforge.filters.products import (
    product_corollary_check,
    product_filter_basis,
    product_meet,
)
from sieveforge.filters.ultrafilters import (
    enumerate_filters,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    is_ultrafilter,
)

__all__ = [
    "CertifiedAs",
    "FilterCertificate",
    "SaturationKernel",
    "as_assignment",
    "certify_basis",
    "certify_filter",
    "check_basis",
    "check_filter",
    "check_subbase",
    "enumerate_filters",
    "enumerate_ultrafilters",
    "extend_to_ultrafilter",
    "filter_from_basis",
    "filter_generators",
    "is_finer",
    "is_ultrafilter",
    "meet_filters",
    "product_corollary_check",
    "product_filter_basis",
    "product_meet",
]
