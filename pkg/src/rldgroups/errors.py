"""Exception types shared across the package."""


class RLDGroupError(Exception):
    """Base class for all errors raised by rldgroups."""


class InvalidAlphabet(RLDGroupError, ValueError):
    pass


class InvalidDigit(RLDGroupError, ValueError):
    pass


class EmptySequence(RLDGroupError, ValueError):
    pass


class EmptyWord(EmptySequence):
    pass


class CapExceeded(RLDGroupError):
    """A size cap (depth, point count, enumeration size) was exceeded."""


class BudgetExceeded(CapExceeded):
    """The configured work budget would be exceeded."""


class DepthMismatch(RLDGroupError, ValueError):
    pass


class LeafOutOfRange(RLDGroupError, IndexError):
    pass


class SwappedPrefix(RLDGroupError, ValueError):
    """Restriction requested through a node whose flip bit is set."""


class NotAMember(RLDGroupError, ValueError):
    """The element is not in J_n for the given alphabet."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path


class ModulusMismatch(RLDGroupError, ValueError):
    pass


class DomainMismatch(RLDGroupError, ValueError):
    pass


class EvenN(RLDGroupError, ValueError):
    """The maximal-orbit criterion is only established for odd depth."""


class InvariantViolation(RLDGroupError):
    """A structural law that must always hold was observed to fail."""
