"""Exception types raised across the package."""


class PtsipError(Exception):
    """Base class for all package errors."""


class ParamError(PtsipError, ValueError):
    """Potential parameters violate their admissible domain."""


class DomainError(PtsipError, ValueError):
    """A coordinate lies outside the natural domain of a potential."""


class SingularityError(PtsipError, ZeroDivisionError):
    """Evaluation at a singular point of the canonical variable."""


class RangeError(PtsipError, ValueError):
    """Integration limits outside the validity region of a closed form."""


class NoBoundRegion(PtsipError):
    """No pair of real, distinct turning points at the requested energy."""


class QuadratureFailure(PtsipError):
    """Quadrature did not reach the requested tolerance."""


class NonFiniteSample(QuadratureFailure):
    """The integrand returned NaN or inf."""


class NoSignChange(PtsipError, ValueError):
    """Root bracket does not enclose a sign change."""


class MaxIterations(PtsipError):
    """Iterative method ran out of iterations."""


class Unbound(PtsipError, IndexError):
    """Requested level lies beyond the bound spectrum."""


class NoConvergence(PtsipError):
    """An eigenvalue or quantization solve failed to converge."""
