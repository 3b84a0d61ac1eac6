"""
Coordinate maps between oriented lines (xi, eta) in TS^2 and points of R^3.

Chart 1 coordinates (xi, eta) come from stereographic projection from the south pole.
Chart 2 coordinates (xi~, eta~) = (1/xi, -eta/xi^2) are evaluated through the rotation
M(z, t) = (conj(z), -t) by pi about the x^1 axis: a chart-2 line maps to M of the chart-1
line with the same coordinates, which keeps every formula finite at xi = infinity.
"""

from typing import Tuple, Union

from linespace.core.types import (
    CHART_NORTH,
    INFINITY,
    EuclideanPoint,
    ExtComplex,
    LinePoint,
    Number,
    OrientedLine,
    Vector3,
    other_chart,
)
from linespace.errors import NormalizationError, UndefinedTransitionError
from linespace.utils.config import DEFAULT_TOLERANCE

XiLike = Union[ExtComplex, Number, None]


def _abs2(w: complex) -> float:
    return w.real * w.real + w.imag * w.imag


def _mirror(v: Vector3) -> Vector3:
    return Vector3(v.vz.conjugate(), -v.vt)


def _direction_north(w: complex) -> Vector3:
    q = 1.0 + _abs2(w)
    return Vector3(2.0 * w / q, (1.0 - _abs2(w)) / q)


def _perp_north(w: complex, eta: complex) -> Vector3:
    q2 = (1.0 + _abs2(w)) ** 2
    vz = 2.0 * (eta - eta.conjugate() * w * w) / q2
    vt = -2.0 * (eta * w.conjugate() + eta.conjugate() * w).real / q2
    return Vector3(vz, vt)


def _inverse_north(z: complex, t: float, w: complex) -> Tuple[complex, float]:
    eta = 0.5 * (z - 2.0 * t * w - z.conjugate() * w * w)
    r = ((w.conjugate() * z + w * z.conjugate()).real + (1.0 - _abs2(w)) * t) / (1.0 + _abs2(w))
    return eta, r


def inner(u: Vector3, v: Vector3) -> float:
    """
    Euclidean inner product in (z, t) components.

    With (d/dz, d/dz-bar) = 1/2 and (d/dt, d/dt) = 1 this is Re(u_z conj(v_z)) + u_t v_t.
    """
    return (u.vz * v.vz.conjugate()).real + u.vt * v.vt


def dir_from_xi(xi: XiLike) -> Vector3:
    """
    Unit vector of S^2 with stereographic coordinate ``xi`` (projection from the south pole).

    Args:
        xi: Direction coordinate; infinity is the south pole

    Returns:
        (2 xi / (1 + |xi|^2), (1 - |xi|^2) / (1 + |xi|^2))
    """
    xi = ExtComplex.of(xi)
    if xi.is_infinite:
        return Vector3(0j, -1.0)
    w = xi.value
    if _abs2(w) > 1.0:
        return _mirror(_direction_north(1.0 / w))
    return _direction_north(w)


def xi_from_dir(v: Vector3, tol: float = DEFAULT_TOLERANCE) -> ExtComplex:
    """
    Stereographic coordinate of a unit vector; the left inverse of :func:`dir_from_xi`.

    Args:
        v: Unit direction vector
        tol: Accepted deviation of |v| from 1

    Returns:
        vz / (1 + vt), or infinity for the south pole

    Raises:
        NormalizationError: if | |v| - 1 | > tol
    """
    norm = v.norm()
    if abs(norm - 1.0) > tol:
        raise NormalizationError(norm, tol)
    if v.vt >= 0.0:
        return ExtComplex(v.vz / (1.0 + v.vt))
    if v.vz == 0:
        return INFINITY
    # vz / (1 + vt) rewritten with |vz|^2 = (1 - vt)(1 + vt); stable near the south pole
    return ExtComplex((1.0 - v.vt) / v.vz.conjugate())


def stereographic_tangent(xi: XiLike, dxi: complex) -> Vector3:
    """
    Push forward of dxi d/dxi + conj(dxi) d/dxi-bar under stereographic projection.

    This is the tangent vector of S^2 at ``xi`` which, parallel translated, is the
    perpendicular displacement of the line (xi, eta = dxi).
    """
    return _perp_north(ExtComplex.of(xi).finite(), complex(dxi))


def line_direction(line: OrientedLine) -> Vector3:
    """Unit direction of ``line`` in either chart."""
    if line.chart == CHART_NORTH:
        return dir_from_xi(line.xi)
    return _mirror(dir_from_xi(line.xi))


def global_xi(line: OrientedLine) -> ExtComplex:
    """Chart-1 direction coordinate of ``line`` (infinity for the south pole)."""
    if line.chart == CHART_NORTH:
        return line.xi
    return line.xi.reciprocal()


def perp_displacement(line: OrientedLine) -> Vector3:
    """
    The fixed vector determining the line: its foot point read as a displacement.

    In chart 1 this is (2(eta - conj(eta) xi^2), -2(eta conj(xi) + conj(eta) xi)) / (1 + |xi|^2)^2.
    It is orthogonal to the line direction.
    """
    perp = _perp_north(line.w, line.eta)
    return perp if line.chart == CHART_NORTH else _mirror(perp)


def line_point(lp: LinePoint) -> EuclideanPoint:
    """
    Point of R^3 at affine parameter r along an oriented line.

    Args:
        lp: The line and the signed parameter r measured from the foot point

    Returns:
        The Euclidean point (z, t)
    """
    displacement = perp_displacement(lp.line) + lp.r * line_direction(lp.line)
    return EuclideanPoint(displacement.vz, displacement.vt)


def foot_point(line: OrientedLine) -> EuclideanPoint:
    """The point of ``line`` closest to the origin (r = 0)."""
    return line_point(LinePoint(line, 0.0))


def lines_through_point(p: EuclideanPoint, xi: XiLike, chart: int = CHART_NORTH) -> LinePoint:
    """
    The oriented line through ``p`` with direction ``xi`` and the parameter of ``p`` on it.

    Args:
        p: A point of R^3
        xi: Direction coordinate in ``chart``; infinity switches to the other chart at 0
        chart: Chart of ``xi`` and of the returned eta

    Returns:
        LinePoint with eta = (z - 2 t xi - conj(z) xi^2) / 2 and
        r = (conj(xi) z + xi conj(z) + (1 - |xi|^2) t) / (1 + |xi|^2) in chart 1
    """
    xi = ExtComplex.of(xi)
    if xi.is_infinite:
        xi = ExtComplex(0j)
        chart = other_chart(chart)
    w = xi.value
    if chart == CHART_NORTH:
        eta, r = _inverse_north(p.z, p.t, w)
    else:
        eta, r = _inverse_north(p.z.conjugate(), -p.t, w)
    return LinePoint(OrientedLine(xi, eta, chart), r)


def incidence_r(p: EuclideanPoint, xi: XiLike, chart: int = CHART_NORTH) -> float:
    """Signed parameter of ``p`` on the line through it with direction ``xi``."""
    return lines_through_point(p, xi, chart).r


def chart_transition(line: OrientedLine) -> OrientedLine:
    """
    Express ``line`` in the opposite chart: xi~ = 1/xi, eta~ = -eta/xi^2.

    Raises:
        UndefinedTransitionError: if xi = 0 in the source chart
    """
    w = line.w
    if w == 0:
        raise UndefinedTransitionError(
            f"Chart transition undefined at xi = 0 (chart {line.chart}, eta = {line.eta!r})"
        )
    return OrientedLine(ExtComplex(1.0 / w), -line.eta / (w * w), other_chart(line.chart))


def to_chart(line: OrientedLine, chart: int) -> OrientedLine:
    """Return ``line`` expressed in ``chart``."""
    if line.chart == chart:
        return line
    return chart_transition(line)
