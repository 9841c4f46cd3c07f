"""Exception hierarchy shared by the engine, the oracle and the CLI."""


class TangleError(ValueError):
    """Base class for every error raised by :mod:`tanglecalc`."""


class UndefinedValueError(TangleError):
    """An extended-rational operation has no value (0/0, inf + inf)."""


class NotCoprimeError(TangleError):
    """A pair of integers that must be coprime is not."""


class NotIntegralError(TangleError):
    """A rational tangle was required to be integral (of the form T(m))."""


class DiagramCapError(TangleError):
    """A planar diagram would exceed the configured crossing cap."""


class DisconnectedDiagramError(TangleError):
    """An operation that needs a connected diagram was given a split one."""


class NotationError(TangleError):
    """Syntax or semantic error in the tangle / knot notation.

    ``position`` is the zero-based character offset of the offending token,
    or ``None`` for purely semantic errors.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        self.bare_message = message
        if text is not None and position is not None:
            message = f"{message} at column {position + 1}\n  {text}\n  {' ' * position}^"
        super().__init__(message)
