"""Normal line congruences of surfaces as sections of TS^2."""

from linespace.congruences.params import (
    BRANCH_MINUS,
    BRANCH_PLUS,
    EllipsoidParams,
    TorusParams,
)
from linespace.congruences.sections import (
    DOMAIN_FULL_SPHERE,
    DOMAIN_MINUS_POLES,
    LineSection,
    SampleResult,
    ellipsoid_section,
    point_sphere_section,
    reconstruct,
    round_sphere_section,
    torus_section,
)
from linespace.congruences.verification import (
    implicit_residual_ellipsoid,
    implicit_residual_sphere,
    implicit_residual_torus,
    verify_normality,
)

__all__ = [
    "BRANCH_MINUS",
    "BRANCH_PLUS",
    "EllipsoidParams",
    "TorusParams",
    "DOMAIN_FULL_SPHERE",
    "DOMAIN_MINUS_POLES",
    "LineSection",
    "SampleResult",
    "ellipsoid_section",
    "point_sphere_section",
    "reconstruct",
    "round_sphere_section",
    "torus_section",
    "implicit_residual_ellipsoid",
    "implicit_residual_sphere",
    "implicit_residual_torus",
    "verify_normality",
]
