"""Exception types raised by the solver stack."""


class SWEError(Exception):
    """Base class for every error raised by this package."""


class NonPositiveHeight(SWEError, ValueError):
    pass


class WrongRegion(SWEError, ValueError):
    pass


class DegenerateJump(SWEError, ValueError):
    pass


class OutOfFan(SWEError, ValueError):
    pass


class BadBracket(SWEError, ValueError):
    pass


class ConvergenceFailure(SWEError, RuntimeError):
    pass


class NoSolution(SWEError):
    """No construction produces an admissible Riemann solution.

    ``interface`` is filled in by the finite-volume driver so callers can
    tell which cell face failed.
    """

    def __init__(self, message, interface=None):
        super().__init__(message)
        self.interface = interface


class ZeroWaveSpeed(SWEError):
    pass


class NegativeHeight(SWEError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class LengthMismatch(SWEError, ValueError):
    pass


class NotApplicable(NoSolution):
    """A particular construction does not apply to the given data."""


class NoIntersection(NoSolution):
    pass


class NoStationaryContact(NotApplicable):
    """The requested bottom level lies above ``a_max`` of the base state."""
