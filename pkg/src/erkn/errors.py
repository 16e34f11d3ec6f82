"""Exception types shared across the package."""


class ErknError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ErknError, ValueError):
    """An argument is outside the mathematical domain (non-finite, wrong sign, ...)."""


class UnsupportedOrderError(ErknError, ValueError):
    """A phi function of unsupported order was requested."""


class ShapeError(ErknError, ValueError):
    """Vector lengths do not match the system's block layout."""


class ResourceError(ErknError, ValueError):
    """A combinatorial enumeration would be too large."""


class SingularCoefficientError(ErknError, ValueError):
    """A scheme coefficient is too close to zero to divide by."""

    def __init__(self, xi, which):
        self.xi = xi
        self.which = which
        super().__init__(f"{which}(xi) is below the singularity threshold at xi={xi!r}")


class DivergenceError(ErknError, RuntimeError):
    """The numerical solution left the admissible region.

    Carries the step index at which divergence was detected and, when the
    caller was recording samples, the last finite sample row.
    """

    def __init__(self, step_index, last_sample=None):
        self.step_index = step_index
        self.last_sample = last_sample
        super().__init__(f"solution diverged at step {step_index}")
