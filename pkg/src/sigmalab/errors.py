"""Exception hierarchy shared by all sigmalab modules."""


class SigmaLabError(Exception):
    """Base class for library-specific failures."""


class DomainError(SigmaLabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class TableRangeError(SigmaLabError, ValueError):
    """An evaluation point exceeds the range of a sigma table."""

    def __init__(self, x: float, n_max: int):
        self.x = x
        self.required_n_max = int(x)
        super().__init__(
            f"x={x!r} needs a table with n_max >= {self.required_n_max}, "
            f"got n_max={n_max}"
        )


class AccuracyError(SigmaLabError, ArithmeticError):
    """A self-convergence check failed; carries both conflicting values."""

    def __init__(self, message: str, value: float, refined: float):
        self.value = value
        self.refined = refined
        super().__init__(f"{message}: value={value!r}, refined={refined!r}")


class CacheError(SigmaLabError, OSError):
    """A sigma-table cache file is missing, corrupt, or mismatched."""
