class ClusterTiltError(Exception):
    """Base class for all library errors."""


class InputError(ClusterTiltError):
    """Bad user input: malformed files, invalid algebras or modules."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


class InvalidRelation(InputError):
    pass


class NotAdmissible(InputError):
    pass


class ConfigurationError(InputError):
    """The prime is not prime, or too small for the algebra."""


class InvalidRepresentation(InputError):
    pass


class NotSplitExtension(InputError):
    pass


class NotClusterTilted(InputError):
    pass


class GlobalDimensionTooLarge(InputError):
    pass


class EmbeddingInvalid(InputError):
    pass


class ComputationLimit(ClusterTiltError):
    """A resolution cap or a randomized trial budget was exhausted."""


class CapTooSmall(ComputationLimit):
    pass


class BudgetExhausted(ComputationLimit):
    pass


class InvariantBreach(ClusterTiltError):
    """An asserted mathematical property failed; indicates a bug or bad input."""
