"""Exception types shared across the package."""

from __future__ import annotations


class SingularKernelError(ValueError):
    """A kernel denominator collapsed below the representable floor.

    Only reachable when alpha is an even integer and t**alpha == lam**alpha;
    every other parameter combination keeps the denominator strictly positive.
    """


class ConvergenceError(RuntimeError):
    """A quadrature loop hit its subdivision or grid cap before the target.

    Carries the best value reached and the achieved error estimate so callers
    can still inspect the partial result.
    """

    def __init__(self, message: str, value=None, err_estimate=None):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate


class TruncationError(RuntimeError):
    """No admissible truncation point exists for a series tail bound.

    Raised when the bound needs more than the term cap, or when lam = 1 is
    requested without a certified coefficient decay.
    """

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value
