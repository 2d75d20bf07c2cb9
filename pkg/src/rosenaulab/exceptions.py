"""Exception hierarchy shared across the package."""


class RosenauError(Exception):
    """Base class for all package errors."""


class ConfigurationError(RosenauError):
    """Invalid grid, run, or iteration configuration."""


class SymmetryError(RosenauError):
    """Conjugate-symmetry violation: spectral data does not represent a real field."""


class DomainError(RosenauError):
    """Operation left the real domain (e.g. fractional power of a negative value)."""


class InstabilityError(RosenauError):
    """Time integration blew up.

    Attributes
    ----------
    t : float
        Simulation time at which the amplitude bound was exceeded.
    step : int or None
        Step index, attached by the driving loop when known.
    """

    def __init__(self, message, t, step=None):
        super().__init__(message)
        self.t = t
        self.step = step


class NonConvergenceError(RosenauError):
    """Fixed-point iteration hit the iteration budget before meeting tolerances.

    Carries the full diagnostics ``history`` so the failure mode can be inspected.
    """

    def __init__(self, message, history):
        super().__init__(message)
        self.history = history
