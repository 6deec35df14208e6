"""Exception hierarchy shared across the toolkit."""


class GGraphError(Exception):
    """Base class for all toolkit errors."""


class InputError(GGraphError):
    """Bad user input: unparsable specs, invalid parameters, malformed files."""


class SpecSyntaxError(InputError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        super().__init__(detail)


class InvalidParameter(InputError):
    pass


class NotAPrimePower(InvalidParameter):
    pass


class SchemaError(InputError):
    pass


class GroundSetTooLarge(InputError):
    pass


class TooManyDivisors(InputError):
    pass


class OrderLimitExceeded(GGraphError):
    pass


class PreconditionFailed(GGraphError):
    pass


class UnknownClaim(InputError):
    pass


class BudgetExceeded(GGraphError):
    """A bounded search ran out of node expansions.

    ``partial`` carries whatever the search had when it stopped (a best-found
    clique, for instance) so callers can still report a lower bound.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
