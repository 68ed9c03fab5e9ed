"""Exception types shared across the package."""

__all__ = [
    "HoleburnError",
    "DegenerateStateError",
    "OrderCapError",
    "SweepConfigError",
]


class HoleburnError(Exception):
    """Base class for package-specific errors."""


class DegenerateStateError(HoleburnError, ValueError):
    """Filtering would leave (numerically) nothing of the state."""


class OrderCapError(HoleburnError, ValueError):
    """A requested moment or witness order exceeds the supported cap."""


class SweepConfigError(HoleburnError, ValueError):
    """A sweep configuration is invalid."""
