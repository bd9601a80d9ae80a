"""Exception hierarchy.

Every error raised on purpose by the package derives from ArrowSpaceError,
which is itself a ValueError so generic callers can catch it the usual way.
"""


class ArrowSpaceError(ValueError):
    pass


class DimensionMismatch(ArrowSpaceError):
    pass


class UndefinedAddition(ArrowSpaceError):
    """Raised when the head of the first arrow is not the tail of the second."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(
            "undefined addition: head %s != tail %s" % (first.head, second.tail)
        )


class DegenerateLine(ArrowSpaceError):
    pass


class DegenerateBetween(ArrowSpaceError):
    pass


class DegenerateArrow(ArrowSpaceError):
    pass


class NotCollinear(ArrowSpaceError):
    pass


class NotOnLine(ArrowSpaceError):
    pass


class PreconditionViolated(ArrowSpaceError):
    pass


class WeightSumNotOne(ArrowSpaceError):
    pass


class DuplicatePoints(ArrowSpaceError):
    pass


class ParseError(ArrowSpaceError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__("line %d: %s" % (lineno, message))


class DuplicateName(ArrowSpaceError):
    pass
