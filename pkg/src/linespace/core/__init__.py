"""Oriented lines in R^3 as points of the tangent bundle of the 2-sphere."""

from linespace.core.types import (
    CHART_NORTH,
    CHART_SOUTH,
    ChartPoint,
    INFINITY,
    ORIGIN,
    EuclideanPoint,
    ExtComplex,
    LinePoint,
    OrientedLine,
    Vector3,
    other_chart,
)
from linespace.core.maps import (
    chart_transition,
    dir_from_xi,
    foot_point,
    global_xi,
    incidence_r,
    inner,
    line_direction,
    line_point,
    lines_through_point,
    perp_displacement,
    stereographic_tangent,
    to_chart,
    xi_from_dir,
)

__all__ = [
    "CHART_NORTH",
    "CHART_SOUTH",
    "ChartPoint",
    "INFINITY",
    "ORIGIN",
    "EuclideanPoint",
    "ExtComplex",
    "LinePoint",
    "OrientedLine",
    "Vector3",
    "other_chart",
    "chart_transition",
    "dir_from_xi",
    "foot_point",
    "global_xi",
    "incidence_r",
    "inner",
    "line_direction",
    "line_point",
    "lines_through_point",
    "perp_displacement",
    "stereographic_tangent",
    "to_chart",
    "xi_from_dir",
]
