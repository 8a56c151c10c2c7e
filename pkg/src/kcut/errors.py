"""Exception hierarchy shared by every kcut module."""


class KCutError(Exception):
    """Base class for all errors raised by kcut."""


class GraphError(KCutError, ValueError):
    """A graph violates a structural or weight invariant."""


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CapacityError(KCutError):
    """An exact routine was asked to run above its instance-size guardrail."""


class InfeasibleError(KCutError, ValueError):
    """No split with the requested separation degree exists."""


class UndefinedDensityError(KCutError, ValueError):
    """Density requested for a split of separation degree below 2."""


class NotApplicableError(KCutError):
    pass
