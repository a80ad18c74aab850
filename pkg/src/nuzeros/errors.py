"""Exception hierarchy shared by all nuzeros modules."""


class NuzerosError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NuzerosError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NonConvergence(NuzerosError, RuntimeError):
    """An iteration hit its cap without meeting tolerance.

    This signals a solver defect, not a user error: the iterations used
    here converge in single-digit counts on their intended domains.
    """


class OverflowGuard(NuzerosError, ArithmeticError):
    """A value left floating-point range and the fallback path failed too."""


class PrecisionLoss(NuzerosError, ArithmeticError):
    """Oscillatory cancellation would exhaust the working precision.

    Raised by the direct Bessel quadrature when the order is too large;
    callers should switch to the phase-function solver.
    """


class QuadratureFailure(NuzerosError, RuntimeError):
    """Panel subdivision cap reached before the tolerance was met."""


class NoSignChange(NuzerosError, ValueError):
    """Root bracket endpoints have equal signs."""


class OdeFailure(NuzerosError, RuntimeError):
    """Phase propagation could not meet its tolerance within the mesh cap."""


class BracketFailure(NuzerosError, RuntimeError):
    """No sign change found after widening a root bracket."""
