"""
Surfaces as sections xi -> (eta(xi), r(xi)) of TS^2 plus incidence data.

A section assigns to each normal direction the normal line of the surface and the
parameter of the surface point on that line. Sections are evaluated in closed form in
either chart; the surfaces here are all invariant under M(z, t) = (conj(z), -t), so the
chart-2 evaluation of the ellipsoid and torus reuses the chart-1 formula.
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from linespace.congruences.params import EllipsoidParams, TorusParams
from linespace.core import (
    CHART_NORTH,
    CHART_SOUTH,
    ChartPoint,
    EuclideanPoint,
    ExtComplex,
    LinePoint,
    OrientedLine,
    line_point,
    lines_through_point,
)
from linespace.errors import BranchPointError, DomainError, ParameterError
from linespace.utils.config import CHART_LIMIT, POLE_EXCLUSION

DOMAIN_FULL_SPHERE = "full sphere"
DOMAIN_MINUS_POLES = "sphere minus poles"

ChartEval = Callable[[complex, int], Tuple[complex, float]]
Sample = Union[ChartPoint, ExtComplex, int, float, complex, None]


@dataclass(frozen=True)
class LineSection:
    """
    A normal line congruence with incidence parameter.

    Attributes:
        name: Short description used in reports
        chart_eval: (w, chart) -> (eta in that chart, r)
        domain: Description of where the section is defined
        branch: Sheet tag for multi-valued sections, else None
    """

    name: str
    chart_eval: ChartEval
    domain: str = DOMAIN_FULL_SPHERE
    branch: Optional[str] = None

    def eval_chart(self, w: complex, chart: int = CHART_NORTH) -> Tuple[complex, float]:
        w = complex(w)
        if abs(w) > CHART_LIMIT:
            raise DomainError(
                f"|xi| = {abs(w):g} exceeds the chart limit {CHART_LIMIT:g}; use the other chart",
                sample=ChartPoint(w, chart),
            )
        return self.chart_eval(w, chart)

    def eval(self, xi: Sample) -> Tuple[complex, float]:
        """
        Evaluate at a global direction.

        This is a chart-1 evaluator: finite xi is evaluated in chart 1 and is limited to
        |xi| <= CHART_LIMIT, beyond which DomainError is raised. At infinity the returned eta
        is the chart-2 fibre coordinate at xi~ = 0. To cover the whole domain pass
        ``ChartPoint.from_xi(xi)``, which picks the chart, or use :func:`reconstruct`.
        """
        if isinstance(xi, ChartPoint):
            return self.eval_chart(xi.w, xi.chart)
        xi = ExtComplex.of(xi)
        if xi.is_infinite:
            return self.eval_chart(0j, CHART_SOUTH)
        return self.eval_chart(xi.value, CHART_NORTH)

    def line_point_at(self, w: complex, chart: int = CHART_NORTH) -> LinePoint:
        eta, r = self.eval_chart(w, chart)
        return LinePoint(OrientedLine(ExtComplex(w), eta, chart), r)

    def point_at(
        self, w: complex, chart: int = CHART_NORTH, offset: float = 0.0
    ) -> EuclideanPoint:
        """Surface point at chart coordinate ``w``; ``offset`` moves to a parallel surface."""
        lp = self.line_point_at(w, chart)
        return line_point(LinePoint(lp.line, lp.r + offset))


@dataclass(frozen=True)
class SampleResult:
    """Outcome of reconstructing one sample of a section."""

    sample: ChartPoint
    eta: Optional[complex] = None
    r: Optional[float] = None
    point: Optional[EuclideanPoint] = None
    error: Optional[DomainError] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def point_sphere_section(p: EuclideanPoint) -> LineSection:
    """
    The sphere of oriented lines through ``p``.

    eta = (z - 2 t xi - conj(z) xi^2) / 2 and
    r = (conj(xi) z + xi conj(z) + (1 - |xi|^2) t) / (1 + |xi|^2); the reconstruction is p.
    """

    def chart_eval(w: complex, chart: int) -> Tuple[complex, float]:
        lp = lines_through_point(p, w, chart)
        return lp.line.eta, lp.r

    return LineSection(name=f"point sphere at {p.as_xyz()}", chart_eval=chart_eval)


def round_sphere_section(center: EuclideanPoint, radius: float) -> LineSection:
    """Outward normal congruence of the round sphere of ``radius`` about ``center``."""
    radius = float(radius)
    if not math.isfinite(radius) or radius < 0:
        raise ParameterError(f"radius must be a non-negative finite number, got {radius!r}")

    def chart_eval(w: complex, chart: int) -> Tuple[complex, float]:
        lp = lines_through_point(center, w, chart)
        return lp.line.eta, lp.r + radius

    return LineSection(
        name=f"sphere of radius {radius:g} at {center.as_xyz()}", chart_eval=chart_eval
    )


def _ellipsoid_eval(params: EllipsoidParams, w: complex) -> Tuple[complex, float]:
    a1, a2, a3 = params.a1, params.a2, params.a3
    w_bar = w.conjugate()
    ww = (w * w_bar).real
    q = 1.0 + ww

    # (xi + conj xi)^2 and -(xi - conj xi)^2 as real squares
    radicand = a1 * (2.0 * w.real) ** 2 + a2 * (2.0 * w.imag) ** 2 + a3 * (1.0 - ww) ** 2
    if not radicand > 0:
        raise ParameterError(f"Ellipsoid radicand is not positive ({radicand!r}) at xi={w!r}")

    numerator = (
        a1 * (w + w_bar) * (1.0 - w * w)
        + a2 * (w - w_bar) * (1.0 + w * w)
        - 2.0 * a3 * w * (1.0 - ww)
    )
    eta = numerator / (2.0 * math.sqrt(radicand))

    n1 = 2.0 * w.real / q
    n2 = 2.0 * w.imag / q
    n3 = (1.0 - ww) / q
    r = math.sqrt(a1 * n1 * n1 + a2 * n2 * n2 + a3 * n3 * n3)
    return eta, r


def ellipsoid_section(params: EllipsoidParams) -> LineSection:
    """
    Normal congruence of the triaxial ellipsoid, a global section over the whole sphere.

    Args:
        params: Squared semi-axes a1, a2, a3

    Returns:
        LineSection with eta, r in closed form in both charts
    """

    def chart_eval(w: complex, _chart: int) -> Tuple[complex, float]:
        return _ellipsoid_eval(params, w)

    return LineSection(
        name=f"ellipsoid ({params.a1:g}, {params.a2:g}, {params.a3:g})", chart_eval=chart_eval
    )


def torus_section(params: TorusParams) -> LineSection:
    """
    One sheet of the normal congruence of the rotationally symmetric torus.

    eta = +-(a/2) (xi/|xi|) (1 - |xi|^2), r = b +- 2a|xi| / (1 + |xi|^2). The phase
    sqrt(xi / conj(xi)) is taken as xi/|xi|. The poles are branch points.
    """
    a, b, sign = params.a, params.b, params.sign

    def chart_eval(w: complex, chart: int) -> Tuple[complex, float]:
        rho = abs(w)
        if rho < POLE_EXCLUSION:
            raise BranchPointError(
                f"Torus section is branched at the pole (|xi| = {rho:g} in chart {chart})",
                sample=ChartPoint(w, chart),
            )
        phase = w / rho
        ww = rho * rho
        eta = sign * 0.5 * a * phase * (1.0 - ww)
        r = b + sign * 2.0 * a * rho / (1.0 + ww)
        return eta, r

    return LineSection(
        name=f"torus ({a:g}, {b:g}) branch {params.branch}",
        chart_eval=chart_eval,
        domain=DOMAIN_MINUS_POLES,
        branch=params.branch,
    )


def reconstruct(section: LineSection, samples: Sequence[Sample]) -> List[SampleResult]:
    """
    Reconstruct surface points of a section at each sample direction.

    Args:
        section: The section to evaluate
        samples: ChartPoints, or global directions (placed in chart 1 if |xi| <= 1,
            else in chart 2)

    Returns:
        One SampleResult per sample, in input order; samples outside the domain carry
        the DomainError and no point
    """
    results = []
    for sample in samples:
        chart_point = sample if isinstance(sample, ChartPoint) else ChartPoint.from_xi(sample)
        try:
            lp = section.line_point_at(chart_point.w, chart_point.chart)
        except DomainError as e:
            results.append(SampleResult(sample=chart_point, error=e))
            continue
        results.append(
            SampleResult(sample=chart_point, eta=lp.line.eta, r=lp.r, point=line_point(lp))
        )
    return results
