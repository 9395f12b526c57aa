"""Exception types shared across the package."""


class DeqCsiError(Exception):
    """Base class for all package errors."""


class ShapeError(DeqCsiError):
    """A tensor dimension does not match the declared contract.

    Carries the offending axis so callers can report which dimension broke.
    """

    def __init__(self, message, axis=None):
        super().__init__(message)
        self.axis = axis


class DivergenceError(DeqCsiError):
    """A fixed-point iterate became non-finite."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration


class BudgetInfeasibleError(DeqCsiError):
    """A FLOPs budget cannot afford even one equilibrium iteration."""

    def __init__(self, message, minimum_budget=None):
        super().__init__(message)
        self.minimum_budget = minimum_budget


class FileFormatError(DeqCsiError):
    """A dataset or checkpoint file failed to parse.

    ``offset`` is the byte position at which parsing failed.
    """

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class TrainingError(DeqCsiError):
    """Training produced non-finite loss or gradients."""
