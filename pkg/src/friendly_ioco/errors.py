"""Exception hierarchy shared by every module of the package."""


class IoltsError(Exception):
    """Base class for all errors raised by friendly_ioco."""


class StructuralError(IoltsError, ValueError):
    """A model or state set refers to states that do not exist."""


class AlphabetError(IoltsError, ValueError):
    """A label is used outside the alphabet it belongs to."""


class ComposabilityError(IoltsError, ValueError):
    """Two models share inputs or share outputs."""


class PreconditionError(IoltsError, ValueError):
    """An operation was called on a model it is not defined for."""


class ParameterError(IoltsError, ValueError):
    """Random generation parameters are degenerate."""


class FormatError(IoltsError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownFixtureError(IoltsError, KeyError):
    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(f"unknown fixture {name!r}; available: {', '.join(self.available)}")

    def __str__(self):
        return self.args[0]
