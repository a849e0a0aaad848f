"""Exception types raised across the package.

Most of these signal violated preconditions on caller-supplied values and
therefore also subclass ValueError, so generic callers can catch them without
importing this module.
"""


class XXRingError(Exception):
    """Base class for all package-specific errors."""


class NonHermitianInput(XXRingError, ValueError):
    """Matrix fails the Hermitian symmetry check."""


class NoConvergence(XXRingError, RuntimeError):
    """Iterative eigensolver exhausted its sweep budget."""


class NotPositiveSemidefinite(XXRingError, ValueError):
    """Matrix has an eigenvalue below the PSD tolerance."""


class UnsupportedSize(XXRingError, ValueError):
    """Problem dimension outside the supported range."""


class BadFieldLength(XXRingError, ValueError):
    """Per-site field list does not match the site count."""


class MappingViolation(XXRingError):
    """Spectrum/amplitude swap symmetry under field negation is broken."""


class NonPositiveTau(XXRingError, ValueError):
    """Scaled temperature must be strictly positive."""


class BadSiteIndex(XXRingError, ValueError):
    """Site index outside [1, n] or kept pair not distinct."""


class InvalidXState(XXRingError, ValueError):
    """X-form matrix elements violate positivity or normalization."""


class NotDensityMatrix(XXRingError, ValueError):
    """Matrix is not Hermitian, unit-trace and PSD within tolerance."""


class OutOfRange(XXRingError, ValueError):
    """Scalar argument outside its admissible interval."""


class DegenerateLimit(XXRingError):
    """Closed-form zero-temperature limit undefined at a degenerate point."""


class ToleranceExceeded(XXRingError):
    """Cross-validation deviation above tolerance; carries the full report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoThresholdFound(XXRingError):
    """No vanishing point of the concurrence in the scanned interval."""


class BadFigureId(XXRingError, ValueError):
    """Figure preset id outside 1..4."""


class InvalidSweepConfig(XXRingError, ValueError):
    """Sweep configuration fails validation (empty axes, tau <= 0, ...)."""
