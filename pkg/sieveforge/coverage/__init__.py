"""Cover assignments and Grothendieck topologies."""

from sieveforge.coverage.assignment import (
    CoverAssignment,
    assignment_from,
    cover_assignment,
    upward_closure,
)
from sieveforge.coverage.topology import (
    Comparison,
    TopologyKind,
    check_topology,
    compare_assignments,
    require_topology,
    standard_assignment,
    standard_topology,
    sup_topology,
    topology_is_filter,
)

__all__ = [
    "Comparison",
    "CoverAssignment",
    "TopologyKind",
    "assignment_from",
    "check_topology",
    "compare_assignments",
    "cover_assignment",
    "require_topology",
    "standard_assignment",
    "standard_topology",
    "sup_topology",
    "topology_is_filter",
    "upward_closure",
]
