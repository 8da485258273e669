"""Exception types shared across the package.

Everything derives from ValueError so callers that do not care about the
exact failure mode can catch one thing.
"""


class PatternLabError(ValueError):
    pass


class ClassTooLargeError(PatternLabError):
    """Enumeration refused: the class size exceeds the configured cap."""


class SequenceParseError(PatternLabError):
    """Malformed sequence/permutation text. Carries the character offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class PatternParseError(PatternLabError):
    """Malformed vincular pattern text."""


class KindMismatchError(PatternLabError):
    """Word pattern applied to a permutation host, or vice versa."""


class NotInClassError(PatternLabError):
    """Input fails the membership precondition of an operation."""


class NotPrimitiveError(PatternLabError):
    """Input has two equal consecutive entries."""


class ShiftUnderflowError(PatternLabError):
    """A nonzero entry would be shifted to zero or below."""


class MalformedInputError(PatternLabError):
    """Input does not have the shape required by a shift algorithm."""
