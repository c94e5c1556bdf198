"""
Domain exceptions for the worklab simulator.

All domain-specific errors inherit from WorklabError.
Exceptions are organized by category: validation errors (bad inputs or
inconsistent configurations) and numerical gate errors (a numerical
precondition or acceptance check did not hold).
"""

from __future__ import annotations

# =============================================================================
# Base Exception
# =============================================================================


class WorklabError(Exception):
    """
    Base exception for all worklab errors.

    Enables catch-all handling at the CLI boundary.
    """

    pass


# =============================================================================
# Validation Errors - General
# =============================================================================


class ValidationError(WorklabError):
    """Base class for validation errors."""

    pass


class InvalidGridError(ValidationError):
    """Raised when grid parameters are invalid (odd or too few points, bad width)."""

    pass


class GridMismatchError(ValidationError):
    """Raised when two fields or traces do not share the same sampling."""

    pass


class DimensionMismatchError(ValidationError):
    """Raised when matrix or ensemble dimensions do not line up."""

    pass


class InvalidModeIndexError(ValidationError):
    """Raised when a mode index is negative or above the configured ceiling."""

    pass


class InvalidTemperatureError(ValidationError):
    """Raised when an inverse temperature is not usable."""

    pass


class DegenerateTemperatureError(InvalidTemperatureError):
    """Raised when beta_hw <= 0 (oscillator state not normalizable)."""

    pass


# =============================================================================
# Validation Errors - Optics
# =============================================================================


class InvalidElementError(ValidationError):
    """Raised when an optical element or FRFT order is malformed."""

    pass


class ZeroFocalLengthError(InvalidElementError):
    """Raised when a thin lens is given f = 0."""

    pass


class InvalidInterferometerConfigError(ValidationError):
    """Raised when a process cannot be paired with the requested final basis."""

    pass


# =============================================================================
# Validation Errors - Operators and Channels
# =============================================================================


class InvalidOperatorError(ValidationError):
    """Raised when a truncated operator is not square or not finite."""

    pass


class InvalidDensityMatrixError(ValidationError):
    """Raised when a matrix is not Hermitian, unit-trace and positive."""

    pass


class InvalidChannelSpecError(ValidationError):
    """Raised when a channel spec file cannot be parsed."""

    pass


class InvalidScenarioError(ValidationError):
    """Raised when a scenario file or flag combination is invalid."""

    pass


# =============================================================================
# Numerical Gate Errors
# =============================================================================


class NumericalGateError(WorklabError):
    """Base class for failed numerical preconditions and gates."""

    pass


class GridTooSmallError(NumericalGateError):
    """Raised when a grid does not cover or resolve the requested mode."""

    pass


class TruncationFailureError(NumericalGateError):
    """Raised when the transition matrix cap is reached without unitarity."""

    pass


class NonUnitaryMaskError(NumericalGateError):
    """Raised when a phase mask has samples off the unit circle."""

    pass


class WrapAroundError(NumericalGateError):
    """Raised when propagated energy leaks into the grid guard band."""

    pass


class BasisDeficitError(NumericalGateError):
    """Raised when a field is not representable in the requested mode basis."""

    pass


class StepTooCoarseError(NumericalGateError):
    """Raised when a split-step phase excursion per step is too large."""

    pass


class AliasingError(NumericalGateError):
    """Raised when a sampled trace is too short or irregular for its support."""

    pass


class NonRealDistributionError(NumericalGateError):
    """Raised when an inverted work distribution keeps an imaginary residue."""

    pass


class NormalizationFailureError(NumericalGateError):
    """Raised when a reconstructed characteristic function has G(0) != 1."""

    pass


class NegativeProbabilityError(NumericalGateError):
    """Raised when a probability falls below the clamping floor."""

    pass


class CompletenessViolationError(NumericalGateError):
    """Raised when Kraus operators do not sum to the identity."""

    pass


class NonRealGammaError(NumericalGateError):
    """Raised when the fluctuation value keeps an imaginary residue."""

    pass


class OverflowRiskError(NumericalGateError):
    """Raised when a raw imaginary-time exponential would overflow."""

    pass


class AcceptanceGateError(NumericalGateError):
    """Raised when a verification suite has failing gates."""

    pass
