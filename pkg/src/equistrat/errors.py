"""Exception types raised across the package."""


class EquistratError(Exception):
    """Base class for all package errors."""


class NotOrthogonal(EquistratError):
    """A generator matrix fails the orthogonality check."""


class OrderExceeded(EquistratError):
    """Group closure passed the configured maximum order."""


class NotIntegral(EquistratError):
    """A quantity that must be an integer has a large rounding residual."""


class InternalMismatch(EquistratError):
    """Two independent computations of the same quantity disagree."""


class SplitFailed(EquistratError):
    """Isotypic splitting could not resolve an eigenvalue cluster."""


class DimensionMismatch(EquistratError):
    """Basis rank disagrees with the trace-formula dimension."""


class NoEquivariants(EquistratError):
    """No nonzero equivariant maps exist up to the degree budget."""


class FixViolation(EquistratError):
    """A restricted map escapes the target fixed-point subspace."""


class GenericRankFailed(EquistratError):
    """Random draws never achieved the generic linear rank."""


class DegreeCapExceeded(EquistratError):
    """The lowest equivariant degree exceeds the degree budget."""


class LengthMismatch(EquistratError):
    """A coefficient vector has the wrong length."""


class EndoTypeAmbiguous(EquistratError):
    """Non-real endomorphism type makes the case comparison ambiguous."""


class SpecError(EquistratError):
    """A problem-spec file failed to parse or validate."""
