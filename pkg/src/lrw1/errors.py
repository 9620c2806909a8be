"""Exception types shared across the package."""


class LrwError(Exception):
    """Base class for all package-specific errors."""


class ParseError(LrwError):
    """Malformed graph input; carries the offending line when known."""

    def __init__(self, reason, line=None):
        self.reason = reason
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{reason}{where}")


class InvalidVertex(LrwError):
    pass


class NotAnEdge(LrwError):
    pass


class NotAPermutation(LrwError):
    pass


class Disconnected(LrwError):
    pass


class TooLarge(LrwError):
    pass


class AlreadyDH(LrwError):
    pass


class NotDH(LrwError):
    pass


class InvalidSequence(LrwError):
    pass


class NotASplit(LrwError):
    pass


class MalformedDecomposition(LrwError):
    pass


class NotATreeEdge(LrwError):
    pass


class NotAPath(LrwError):
    pass


class NotApplicable(LrwError):
    pass


class InternalInvariantViolation(LrwError):
    pass


class CapExceeded(LrwError):
    pass
