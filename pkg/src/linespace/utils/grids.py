"""Sample grids over the Riemann sphere."""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from linespace.core import CHART_NORTH, CHART_SOUTH, ChartPoint
from linespace.errors import ParameterError

GRID_DISK = "disk"
GRID_ANNULUS = "annulus"
GRID_TWO_CHART = "two-chart"
GRID_KINDS = (GRID_DISK, GRID_ANNULUS, GRID_TWO_CHART)


@dataclass(frozen=True)
class GridSpec:
    """
    A polar grid of direction samples.

    Attributes:
        kind: "disk" (chart 1, |xi| <= max_modulus), "annulus" (chart 1,
            inner_radius <= |xi| <= max_modulus, geometric radial spacing) or "two-chart"
            (the disk |w| <= max_modulus in chart 1 followed by the same disk in chart 2)
        radial_count: Number of radii
        angular_count: Number of angles per radius
        max_modulus: Outer radius in each chart
        inner_radius: Inner radius of an annulus; defaults to 1/max_modulus when
            max_modulus > 1 so the annulus is symmetric under |xi| -> 1/|xi|
    """

    kind: str
    radial_count: int
    angular_count: int
    max_modulus: float
    inner_radius: Optional[float] = None

    def __post_init__(self):
        if self.kind not in GRID_KINDS:
            raise ParameterError(f"Unknown grid kind {self.kind!r}; expected one of {GRID_KINDS}")
        for name in ("radial_count", "angular_count"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ParameterError(f"{name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        max_modulus = float(self.max_modulus)
        if not math.isfinite(max_modulus) or max_modulus <= 0:
            raise ParameterError(f"max_modulus must be positive, got {self.max_modulus!r}")
        object.__setattr__(self, "max_modulus", max_modulus)

        if self.kind == GRID_ANNULUS:
            inner = self.inner_radius
            if inner is None:
                inner = 1.0 / max_modulus if max_modulus > 1 else max_modulus / 10.0
            inner = float(inner)
            if not inner > 0 or inner >= max_modulus:
                raise ParameterError(
                    f"Annulus needs 0 < inner radius < outer radius, got {inner!r} and "
                    f"{max_modulus!r}"
                )
            object.__setattr__(self, "inner_radius", inner)

    def radii(self) -> np.ndarray:
        if self.kind == GRID_ANNULUS:
            if self.radial_count == 1:
                return np.array([self.inner_radius])
            return np.geomspace(self.inner_radius, self.max_modulus, self.radial_count)
        if self.radial_count == 1:
            return np.array([self.max_modulus])
        return np.linspace(0.0, self.max_modulus, self.radial_count)

    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count

    def chart_samples(self) -> np.ndarray:
        """Complex chart coordinates, radius-major, for one chart."""
        values = self.radii()[:, None] * np.exp(1j * self.angles())[None, :]
        return values.ravel()

    def samples(self) -> List[ChartPoint]:
        """All grid samples in grid order."""
        values = self.chart_samples()
        charts = [CHART_NORTH, CHART_SOUTH] if self.kind == GRID_TWO_CHART else [CHART_NORTH]
        return [ChartPoint(complex(w), chart) for chart in charts for w in values]

    def __len__(self) -> int:
        per_chart = self.radial_count * self.angular_count
        return 2 * per_chart if self.kind == GRID_TWO_CHART else per_chart
