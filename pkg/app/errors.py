"""Exception hierarchy shared by the coverage pipeline and the CLI."""


class OpaqueError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(OpaqueError, ValueError):
    pass


class DegenerateInputError(OpaqueError, ValueError):
    """Two identical points were given where a line or direction is needed."""


class ValidationError(OpaqueError, ValueError):
    """A barrier failed validation; `index` names the offending segment."""

    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        where = f"segment {index}: " if index is not None else ""
        super().__init__(f"{where}{reason}")


class ParseError(OpaqueError, ValueError):
    """A document could not be parsed; `location` says where, `token` what."""

    def __init__(self, location, reason, token=None):
        self.location = location
        self.reason = reason
        self.token = token
        shown = f" ({token!r})" if token is not None else ""
        super().__init__(f"{location}: {reason}{shown}")


class ContractViolationError(OpaqueError, RuntimeError):
    """A caller broke the precondition of an operation."""


class InvariantViolationError(OpaqueError, RuntimeError):
    """A computed result broke one of its own invariants."""
