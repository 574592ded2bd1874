"""Exception hierarchy shared by all modules."""


class HodgeError(Exception):
    """Base class for every error raised by :mod:`cihodge`."""


class DimensionError(HodgeError, ValueError):
    """An index or dimension is out of the admissible range."""


class SymmetryError(HodgeError, ValueError):
    """A table that must satisfy h^{p,q} = h^{q,p} does not."""


class ConsistencyError(HodgeError):
    """Internal bookkeeping produced an impossible value, e.g. a negative dimension.

    This signals an invalid input tower or a bug, never a user mistake.
    """


class SpecError(HodgeError, ValueError):
    """A complete-intersection or ambient specification is malformed."""


class SchemaError(SpecError):
    """An ambient file does not follow the expected schema."""

    def __init__(self, message, *, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class OracleError(HodgeError):
    """An oracle produced a non-integral or otherwise impossible value."""
