from maxarc.arcs.denniston import (
    DennistonSpec,
    DennistonArc,
    denniston_arc,
    power_basis,
    standard_pencil,
    subgroup_span,
)
from maxarc.arcs.geometry import ProjPoint, line_intersection_profile, general_position_check, is_maximal_arc
from maxarc.arcs.pg3 import PG3ArcSpec, PG3Arc, pg3_arc

__all__ = [
    "DennistonSpec",
    "DennistonArc",
    "denniston_arc",
    "power_basis",
    "standard_pencil",
    "subgroup_span",
    "ProjPoint",
    "line_intersection_profile",
    "general_position_check",
    "is_maximal_arc",
    "PG3ArcSpec",
    "PG3Arc",
    "pg3_arc",
]
