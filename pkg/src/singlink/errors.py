"""Exception hierarchy shared by all singlink modules."""


class SinglinkError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NonUnitError(SinglinkError):
    """A ring element required to be invertible is not a unit."""


class DimensionMismatchError(SinglinkError):
    """Tables or maps whose carrier sets disagree in size."""


class SearchBoundExceededError(SinglinkError):
    """An exhaustive search was requested beyond its configured bound."""


class HomogeneityViolationError(SinglinkError):
    """phi does not commute with multiplication by s, t or -1."""


class NotInvolutiveError(SinglinkError):
    """An operation requiring an involutive switch got S with S^2 != Id."""


class UnknownNameError(SinglinkError):
    """No builtin object registered under the requested name."""


class CocycleInvalidError(SinglinkError):
    """A cocycle pair failed its defining conditions."""


class PatternMismatchError(SinglinkError):
    """A rewrite was requested at a site that does not match the move."""


class DiagramError(SinglinkError):
    """Base class for diagram construction/parsing problems."""


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SlotReuseError(DiagramError):
    """An edge token occurs twice as an in-slot or twice as an out-slot."""


class DanglingEdgeError(DiagramError):
    """An edge token is consumed but never produced, or vice versa."""


class BadBasepointError(DiagramError):
    """A base declaration names a missing component or a foreign edge."""
