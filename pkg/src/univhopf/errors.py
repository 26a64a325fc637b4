"""Shared exception types; the CLI maps these onto distinct exit codes."""


class InputError(ValueError):
    """Malformed or schema-violating input document."""


class PreconditionError(ValueError):
    """Structurally valid input that violates an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """A configured bound (enumeration cap, coset limit, degree bound) was hit."""
