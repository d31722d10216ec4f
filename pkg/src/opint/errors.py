"""Exception types shared across the package."""


class InputDomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class ConvergenceError(RuntimeError):
    """An iteration exhausted its budget; carries the final residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class EvaluationError(ValueError):
    """A user-supplied function returned a non-finite or undefined value."""


class IllPosedError(ValueError):
    """A problem instance has no stable solution (e.g. vanishing spectral gap)."""

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


class ConfigError(ValueError):
    """A scenario or quadrature configuration is invalid."""
