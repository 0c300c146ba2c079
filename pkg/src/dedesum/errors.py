"""Exception hierarchy shared by every module."""


class DedesumError(Exception):
    """Base class."""


class DomainError(DedesumError, ValueError):
    """Input outside the mathematical domain of an operation."""


class InconsistencyError(DedesumError, ArithmeticError):
    """An exact result failed a structural check (non-integral class number,
    oracle disagreement, ...). Always indicates a bug, never bad input."""


class NotRational(DedesumError, ArithmeticError):
    """A cyclotomic number that was required to be rational is not."""

    def __init__(self, reduced):
        self.reduced = reduced
        super().__init__(f"not rational: {reduced}")


class UndeterminedUnitIndex(DomainError):
    """No rule fixes the Hasse unit index and none was supplied."""
