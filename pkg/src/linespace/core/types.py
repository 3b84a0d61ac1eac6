"""Value types for oriented lines in R^3 = C + R and their TS^2 coordinates."""

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from linespace.errors import DomainError

Number = Union[int, float, complex]

CHART_NORTH = 1
CHART_SOUTH = 2


def other_chart(chart: int) -> int:
    """Return the chart that is not ``chart``."""
    return CHART_SOUTH if chart == CHART_NORTH else CHART_NORTH


@dataclass(frozen=True)
class ExtComplex:
    """
    A point of the extended complex plane.

    ``value`` is the finite coordinate, or ``None`` for the point at infinity.
    Use :meth:`of` to coerce plain numbers and :meth:`infinity` for the point at infinity.
    """

    value: Optional[complex]

    def __post_init__(self):
        if self.value is None:
            return
        value = complex(self.value)
        if not cmath.isfinite(value):
            raise ValueError(
                f"ExtComplex finite value must be finite, got {self.value!r}; "
                "use ExtComplex.infinity() for the point at infinity"
            )
        object.__setattr__(self, "value", value)

    @classmethod
    def infinity(cls) -> "ExtComplex":
        return cls(None)

    @classmethod
    def of(cls, value: Union["ExtComplex", Number, None]) -> "ExtComplex":
        """
        Coerce a number (or ``None``/an infinite float) to an ExtComplex.

        Args:
            value: An ExtComplex, a real or complex number, or None for infinity

        Returns:
            The corresponding ExtComplex
        """
        if isinstance(value, ExtComplex):
            return value
        if value is None:
            return cls(None)
        value = complex(value)
        if cmath.isinf(value):
            return cls(None)
        return cls(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def finite(self) -> complex:
        """Return the finite value, raising DomainError at infinity."""
        if self.value is None:
            raise DomainError("xi is the point at infinity; use the second chart", sample=self)
        return self.value

    def reciprocal(self) -> "ExtComplex":
        """Return 1/xi on the Riemann sphere (0 and infinity are exchanged)."""
        if self.value is None:
            return ExtComplex(0j)
        if self.value == 0:
            return ExtComplex(None)
        return ExtComplex(1 / self.value)

    def isclose(self, other: "ExtComplex", tol: float) -> bool:
        """Exact comparison on the infinity tag, absolute tolerance on finite values."""
        other = ExtComplex.of(other)
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return abs(self.value - other.value) <= tol

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return f"{self.value.real!r}{self.value.imag:+}j"


INFINITY = ExtComplex(None)


@dataclass(frozen=True)
class Vector3:
    """A tangent vector of R^3 stored as (complex z-component, real t-component)."""

    vz: complex
    vt: float

    def __post_init__(self):
        object.__setattr__(self, "vz", complex(self.vz))
        object.__setattr__(self, "vt", float(self.vt))

    def as_xyz(self) -> Tuple[float, float, float]:
        return (self.vz.real, self.vz.imag, self.vt)

    def norm(self) -> float:
        return math.hypot(abs(self.vz), self.vt)

    def normalized(self) -> "Vector3":
        return self * (1.0 / self.norm())

    def isclose(self, other: "Vector3", tol: float) -> bool:
        return abs(self.vz - other.vz) <= tol and abs(self.vt - other.vt) <= tol

    def __add__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.vz + other.vz, self.vt + other.vt)

    def __sub__(self, other: "Vector3") -> "Vector3":
        return Vector3(self.vz - other.vz, self.vt - other.vt)

    def __mul__(self, scalar: float) -> "Vector3":
        return Vector3(self.vz * scalar, self.vt * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class EuclideanPoint:
    """A point of R^3 = C + R with z = x + iy and t the third coordinate."""

    z: complex
    t: float

    def __post_init__(self):
        z = complex(self.z)
        t = float(self.t)
        if not (cmath.isfinite(z) and math.isfinite(t)):
            raise ValueError(f"EuclideanPoint components must be finite, got z={z!r}, t={t!r}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_xyz(cls, x: float, y: float, t: float) -> "EuclideanPoint":
        return cls(complex(x, y), t)

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag

    def as_xyz(self) -> Tuple[float, float, float]:
        return (self.z.real, self.z.imag, self.t)

    def as_vector(self) -> Vector3:
        """The displacement of this point from the origin."""
        return Vector3(self.z, self.t)

    def norm(self) -> float:
        return math.hypot(abs(self.z), self.t)

    def isclose(self, other: "EuclideanPoint", tol: float) -> bool:
        return abs(self.z - other.z) <= tol and abs(self.t - other.t) <= tol

    def __sub__(self, other: "EuclideanPoint") -> Vector3:
        return Vector3(self.z - other.z, self.t - other.t)


ORIGIN = EuclideanPoint(0j, 0.0)


@dataclass(frozen=True)
class OrientedLine:
    """
    An oriented line as a point (xi, eta) of TS^2.

    ``xi`` and ``eta`` are coordinates in ``chart``: chart 1 is stereographic projection from
    the south pole, chart 2 is related to it by xi~ = 1/xi, eta~ = -eta/xi^2. A line built
    with ``xi`` at infinity is stored in the opposite chart at xi = 0, so ``eta`` passed
    together with an infinite ``xi`` is read as the fibre coordinate of that opposite chart.
    """

    xi: ExtComplex
    eta: complex
    chart: int = CHART_NORTH

    def __post_init__(self):
        if self.chart not in (CHART_NORTH, CHART_SOUTH):
            raise ValueError(f"chart must be 1 or 2, got {self.chart!r}")
        xi = ExtComplex.of(self.xi)
        eta = complex(self.eta)
        if not cmath.isfinite(eta):
            raise ValueError(f"eta must be finite, got {eta!r}")
        if xi.is_infinite:
            xi = ExtComplex(0j)
            object.__setattr__(self, "chart", other_chart(self.chart))
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)

    @property
    def w(self) -> complex:
        """The finite direction coordinate in this line's own chart."""
        return self.xi.finite()


@dataclass(frozen=True)
class ChartPoint:
    """A finite direction coordinate ``w`` tagged with the chart it belongs to."""

    w: complex
    chart: int = CHART_NORTH

    def __post_init__(self):
        if self.chart not in (CHART_NORTH, CHART_SOUTH):
            raise ValueError(f"chart must be 1 or 2, got {self.chart!r}")
        w = complex(self.w)
        if not cmath.isfinite(w):
            raise ValueError(f"chart coordinate must be finite, got {w!r}")
        object.__setattr__(self, "w", w)

    @classmethod
    def from_xi(cls, xi: Union[ExtComplex, Number, None]) -> "ChartPoint":
        """Place a global direction in chart 1 when |xi| <= 1 and in chart 2 otherwise."""
        xi = ExtComplex.of(xi)
        if xi.is_infinite:
            return cls(0j, CHART_SOUTH)
        if abs(xi.value) <= 1.0:
            return cls(xi.value, CHART_NORTH)
        return cls(1.0 / xi.value, CHART_SOUTH)

    @property
    def global_xi(self) -> ExtComplex:
        """The chart-1 coordinate of this direction."""
        if self.chart == CHART_NORTH:
            return ExtComplex(self.w)
        return ExtComplex(self.w).reciprocal()


@dataclass(frozen=True)
class LinePoint:
    """A point on an oriented line at signed affine parameter ``r`` from its foot point."""

    line: OrientedLine
    r: float

    def __post_init__(self):
        r = float(self.r)
        if not math.isfinite(r):
            raise ValueError(f"r must be finite, got {r!r}")
        object.__setattr__(self, "r", r)
