"""Exceptions raised by the linespace library."""

from typing import Any, Optional


class LinespaceError(ValueError):
    """Base class for all linespace errors."""


class GeometryWarning(UserWarning):
    """Issued for parameters that are valid but describe a degenerate surface."""


class NormalizationError(LinespaceError):
    """A direction vector was expected to have unit length."""

    def __init__(self, norm: float, tol: float):
        super().__init__(f"Direction vector is not unit length: |v| = {norm!r} (tol {tol:g})")
        self.norm = norm
        self.tol = tol


class UndefinedTransitionError(LinespaceError):
    """The chart transition is not defined at xi = 0."""


class ParameterError(LinespaceError):
    """Surface or grid parameters are invalid."""


class DomainError(LinespaceError):
    """A sample lies outside the domain of a section."""

    def __init__(self, message: str, sample: Optional[Any] = None):
        super().__init__(message)
        self.sample = sample


class BranchPointError(DomainError):
    """A multi-valued section was evaluated at one of its branch points."""


class DegenerateParametrizationError(LinespaceError):
    """Finite-difference tangent vectors collapsed."""

    def __init__(self, message: str, tangent_norm: float):
        super().__init__(message)
        self.tangent_norm = tangent_norm
