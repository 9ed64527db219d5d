"""Exception hierarchy shared by every module."""


class CurveStabError(Exception):
    """Base class for errors raised by curvestab."""


class ValidationError(CurveStabError, ValueError):
    """Input does not satisfy a documented invariant.

    ``invariant`` names the violated rule so callers (and the CLI) can
    report it without parsing the message.
    """

    def __init__(self, message, invariant=None):
        super().__init__(message)
        self.invariant = invariant


class UnsupportedKindError(CurveStabError, ValueError):
    """The operation has no closed form for this curve or singularity kind."""


class InvariantError(CurveStabError, RuntimeError):
    """An internal consistency check failed."""
