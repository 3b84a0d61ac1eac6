"""Surface parameters for the ellipsoid and torus congruences."""

import math
import warnings
from dataclasses import dataclass

from linespace.errors import GeometryWarning, ParameterError

BRANCH_PLUS = "+"
BRANCH_MINUS = "-"


def _check_positive(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as e:
        raise ParameterError(f"{name} must be a number, got {value!r}") from e
    if not math.isfinite(value) or value <= 0:
        raise ParameterError(f"{name} must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class EllipsoidParams:
    """
    Triaxial ellipsoid x^2/a1 + y^2/a2 + t^2/a3 = 1.

    a1, a2, a3 are the squared semi-axes; see :meth:`from_semi_axes`.
    """

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            object.__setattr__(self, name, _check_positive(name, getattr(self, name)))

    @classmethod
    def from_semi_axes(cls, s1: float, s2: float, s3: float) -> "EllipsoidParams":
        s1, s2, s3 = (_check_positive(n, s) for n, s in (("s1", s1), ("s2", s2), ("s3", s3)))
        return cls(s1 * s1, s2 * s2, s3 * s3)

    @property
    def semi_axes(self):
        return (math.sqrt(self.a1), math.sqrt(self.a2), math.sqrt(self.a3))

    @property
    def scale(self) -> float:
        """Largest squared semi-axis, used to make residuals relative."""
        return max(self.a1, self.a2, self.a3)


@dataclass(frozen=True)
class TorusParams:
    """
    Rotationally symmetric torus about the t axis.

    ``a`` is the radius of the centre circle in the plane t = 0 and ``b`` the tube radius;
    the torus is embedded when a > b. ``branch`` selects the sheet of the double cover.
    """

    a: float
    b: float
    branch: str = BRANCH_PLUS

    def __post_init__(self):
        object.__setattr__(self, "a", _check_positive("a", self.a))
        object.__setattr__(self, "b", _check_positive("b", self.b))
        if self.branch not in (BRANCH_PLUS, BRANCH_MINUS):
            raise ParameterError(f"branch must be '+' or '-', got {self.branch!r}")
        if self.a <= self.b:
            warnings.warn(
                f"Torus with centre radius a={self.a:g} <= tube radius b={self.b:g} "
                "is not embedded",
                GeometryWarning,
                stacklevel=3,
            )

    @property
    def sign(self) -> float:
        return 1.0 if self.branch == BRANCH_PLUS else -1.0

    @property
    def scale(self) -> float:
        return self.a * self.a + self.b * self.b

    def with_branch(self, branch: str) -> "TorusParams":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", GeometryWarning)
            return TorusParams(self.a, self.b, branch)
