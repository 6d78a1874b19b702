"""Exception types shared across the package.

Classification must be able to distinguish "undefined" from "zero", so
numeric domain violations raise typed errors instead of returning NaN.
"""


class GawkCurvesError(Exception):
    """Base class for all package errors."""


class InputError(GawkCurvesError):
    """Bad user input (files, flags, parameters)."""


class ParseError(InputError):
    """Syntax or semantic error in a curve/profile expression.

    Carries 1-based ``line`` and ``col`` of the offending token.
    """

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"{message} (line {line}, col {col})"
        super().__init__(message)


class SingularityError(GawkCurvesError):
    """Jet arithmetic hit a singular point (division by a jet with zero
    constant term, sqrt/pow of a nonpositive constant term)."""


class DegenerateCurveError(GawkCurvesError):
    """Zero-speed parametrization point: arclength is not invertible."""


class ContractError(GawkCurvesError):
    """A documented precondition of an operation was violated."""


class ResolutionError(GawkCurvesError):
    """Sampled data too coarse for the finite-difference stencil."""


class FrameInconsistencyError(GawkCurvesError):
    """Curvature/order mismatch: a nonzero coefficient multiplies a frame
    vector beyond the detected osculating order."""


class ProfileError(InputError):
    """Invalid curvature profile (nonpositive curvature, bad grid, ...)."""
