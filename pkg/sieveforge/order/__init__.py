"""
Finite lattices, frames and up/down-set machinery.
"""

from sieveforge.order.element_sets import (
    ElementSet,
    closure_down,
    closure_up,
    down_sets,
    element_set,
    is_down_set,
    is_lattice_filter,
    is_prime_filter,
    is_up_set,
    principal_down,
    principal_up,
    up_sets,
)
from sieveforge.order.lattice import (
    FiniteLattice,
    build_lattice,
    complements,
    divisor_lattice,
    is_boolean,
    is_frame,
    join_of,
    meet_of,
)

__all__ = [
    "ElementSet",
    "FiniteLattice",
    "build_lattice",
    "closure_down",
    "closure_up",
    "complements",
    "divisor_lattice",
    "down_sets",
    "element_set",
    "is_boolean",
    "is_down_set",
    "is_frame",
    "is_lattice_filter",
    "is_prime_filter",
    "is_up_set",
    "join_of",
    "meet_of",
    "principal_down",
    "principal_up",
    "up_sets",
]
