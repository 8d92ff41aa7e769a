"""Error hierarchy shared by the library and the command line."""


class SchubertConeError(Exception):
    """Base class for every error raised by schubert-cone."""


class InvalidInputError(SchubertConeError, ValueError):
    """Malformed index set, root, chain or monomial, or a violated precondition."""


class BudgetExceededError(SchubertConeError):
    """The configured enumeration node budget ran out."""

    def __init__(self, limit: int, spent: int) -> None:
        super().__init__(f"budget exceeded: {spent} nodes spent, limit {limit}")
        self.limit = limit
        self.spent = spent


class VerificationError(SchubertConeError):
    """Two independent computations of the same quantity disagreed."""

    def __init__(self, message: str, **witness: object) -> None:
        super().__init__(message)
        self.witness = witness
