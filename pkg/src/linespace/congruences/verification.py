"""Implicit-equation oracles and the finite-difference normality check."""

import math
from typing import Optional

from linespace.congruences.params import EllipsoidParams, TorusParams
from linespace.congruences.sections import LineSection, Sample
from linespace.core import (
    CHART_NORTH,
    ChartPoint,
    EuclideanPoint,
    ExtComplex,
    OrientedLine,
    inner,
    line_direction,
)
from linespace.errors import DegenerateParametrizationError, ParameterError
from linespace.utils.config import DEFAULT_STEP


def implicit_residual_ellipsoid(params: EllipsoidParams, p: EuclideanPoint) -> float:
    """x^2/a1 + y^2/a2 + t^2/a3 - 1, zero on the ellipsoid."""
    return p.x**2 / params.a1 + p.y**2 / params.a2 + p.t**2 / params.a3 - 1.0


def implicit_residual_torus(params: TorusParams, p: EuclideanPoint) -> float:
    """
    Residual of the algebraic torus with centre radius a and tube radius b.

    Returns ((rho - a)^2 + t^2 - b^2) * ((rho + a)^2 + t^2 - b^2) with rho = sqrt(x^2 + y^2),
    which vanishes on both sheets of the torus congruence, including points of a
    self-intersecting torus that lie on the tube around the opposite side of the centre circle.
    """
    rho = abs(p.z)
    b2 = params.b * params.b
    outer = (rho - params.a) ** 2 + p.t**2 - b2
    inner_ = (rho + params.a) ** 2 + p.t**2 - b2
    return outer * inner_


def implicit_residual_sphere(center: EuclideanPoint, radius: float, p: EuclideanPoint) -> float:
    """|p - center|^2 - radius^2."""
    return (p - center).norm() ** 2 - radius * radius


def verify_normality(
    section: LineSection,
    xi: Sample,
    h: float = DEFAULT_STEP,
    offset: float = 0.0,
    chart: Optional[int] = None,
) -> float:
    """
    Finite-difference check that the section's lines are normal to its surface.

    The surface X is reconstructed around ``xi`` in one chart; central differences with
    step ``h`` along Re xi and Im xi give two tangent vectors.

    Args:
        section: Section to check
        xi: Direction at which to check; a ChartPoint fixes the chart
        h: Finite-difference step
        offset: Added to r, so the check runs on a parallel surface. A point sphere
            reconstructs a single point, so it needs a non-zero offset.
        chart: Force the chart used for a global ``xi``

    Returns:
        max |<dir(xi), T / |T|>| over the two tangents T

    Raises:
        DegenerateParametrizationError: if a tangent has norm below h^2
    """
    if not h > 0:
        raise ParameterError(f"Finite-difference step must be positive, got {h!r}")

    if isinstance(xi, ChartPoint):
        chart_point = xi
    elif chart is not None:
        xi = ExtComplex.of(xi)
        coordinate = xi if chart == CHART_NORTH else xi.reciprocal()
        chart_point = ChartPoint(coordinate.finite(), chart)
    else:
        chart_point = ChartPoint.from_xi(xi)

    w, c = chart_point.w, chart_point.chart
    direction = line_direction(OrientedLine(w, 0j, c))

    residual = 0.0
    for step in (h, 1j * h):
        forward = section.point_at(w + step, c, offset)
        backward = section.point_at(w - step, c, offset)
        tangent = (forward - backward) * (1.0 / (2.0 * h))
        norm = tangent.norm()
        if not math.isfinite(norm) or norm < h * h:
            raise DegenerateParametrizationError(
                f"Degenerate tangent (|T| = {norm:g}) for {section.name} at xi = {w!r} "
                f"in chart {c}",
                tangent_norm=norm,
            )
        residual = max(residual, abs(inner(direction, tangent.normalized())))

    return residual
