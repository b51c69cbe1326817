"""Exception types shared across the package."""


class StarInvError(Exception):
    """Base class for all starinv errors."""


class InvalidParameterError(StarInvError):
    """A constructor was given parameters outside its domain."""


class ParseError(StarInvError):
    """A ring spec or element literal failed to parse."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RingMismatchError(StarInvError):
    """Elements from different rings were combined."""


class InvalidArgumentError(StarInvError):
    """An argument violates a documented requirement (e.g. non-idempotent p)."""


class PreconditionError(StarInvError):
    """An operation's predicate precondition does not hold.

    ``method`` names the failing check so callers can report which
    characterization rejected the element.
    """

    def __init__(self, message, method=None):
        super().__init__(message)
        self.method = method


class UnknownIdError(StarInvError):
    """Unknown theorem or claim identifier."""


class BoundExceededError(StarInvError):
    """A pair/triple-exhaustive check was requested on a carrier above the guard."""


class MethodDisagreementError(StarInvError):
    """Two characterizations of the same predicate disagreed on an element.

    This is a build-breaking event: the characterizations are provably
    equivalent, so a disagreement means a defect in this package.
    """
