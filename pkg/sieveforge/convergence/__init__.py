"""Points, neighborhoods, convergence and compactness."""

from sieveforge.convergence.compactness import (
    CompactnessMethod,
    CompactnessReport,
    compactness_report,
    tychonoff_check,
)
from sieveforge.convergence.limits import (
    basis_cluster_points,
    basis_converges,
    closure,
    cluster_points,
    converges,
    limit_points,
    sup_converges,
)
from sieveforge.convergence.neighborhoods import (
    NeighborhoodSystem,
    g_neighborhoods,
    neighborhood_system,
)
from sieveforge.convergence.points import (
    LocalePoint,
    Point,
    check_point,
    is_frame_homomorphism,
    locale_points,
    point_label,
    point_to_dict,
    points_of,
    resolve_point,
)

__all__ = [
    "CompactnessMethod",
    "CompactnessReport",
    "LocalePoint",
    "NeighborhoodSystem",
    "Point",
    "basis_cluster_points",
    "basis_converges",
    "check_point",
    "closure",
    "cluster_points",
    "compactness_report",
    "converges",
    "g_neighborhoods",
    "is_frame_homomorphism",
    "limit_points",
    "locale_points",
    "neighborhood_system",
    "point_label",
    "point_to_dict",
    "points_of",
    "resolve_point",
    "sup_converges",
    "tychonoff_check",
]
