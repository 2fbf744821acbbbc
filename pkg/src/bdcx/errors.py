"""Exception types shared across the package."""


class BdcxError(Exception):
    """Base class for all errors raised by bdcx."""


class PreconditionError(BdcxError, ValueError):
    """An operation was called on input outside its domain."""


class NotAForest(PreconditionError):
    pass


class LabelCollision(PreconditionError):
    pass


class UnknownVertex(PreconditionError, KeyError):
    pass


class BudgetExceeded(BdcxError):
    """A search ran out of its node/state budget before reaching a verdict."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: budget of {budget} exceeded")
        self.what = what
        self.budget = budget


class ComplexTooLarge(BdcxError):
    """Face enumeration would exceed the configured capacity."""


class InvalidShelling(PreconditionError):
    pass


class ParseError(BdcxError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
