"""Exception types shared across the package."""


class QringError(Exception):
    """Base class for all package-specific errors."""


class DegenerateStateError(QringError, ValueError):
    """Raised when a state would have zero norm (all coefficients zero)."""


class AliasingError(QringError, ValueError):
    """Raised when a sampled function is not resolved by the given grid.

    Triggered when the top decile of representable modes carries more than
    the configured tolerance of the total spectral weight.
    """


class UnsupportedStateError(QringError, ValueError):
    """Raised when an operation requires a strictly periodic state
    (boundary phase zero) but received a quasi-periodic one."""


class ResolutionError(QringError, ValueError):
    """Raised when a construction would need more Fourier modes than the
    configured mode cap allows."""
