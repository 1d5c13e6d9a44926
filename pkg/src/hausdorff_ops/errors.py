"""Exception hierarchy shared by all modules."""


class HausdorffError(Exception):
    """Base class for every library-specific error."""


class NonFiniteSample(HausdorffError):
    """An integrand returned inf/nan at a quadrature node."""


class SingularityMismatch(HausdorffError):
    """Principal-value node layout is not symmetric about a declared singularity."""


class NoMetric(HausdorffError):
    """Operation requires a quasi-metric but the domain has none."""


class NoMeasure(HausdorffError):
    """Operation requires a reference measure but the domain has none."""


class EmptyBall(HausdorffError):
    """A sampled ball carries zero measure."""


class EmptyLevel(HausdorffError):
    """A filter-base sampler produced no points at some level."""


class EmptyPreimage(HausdorffError):
    """No node maps into the target ball under the automorphism."""


class WindowEscape(HausdorffError):
    """A preimage or probed support leaves the computational window."""


class InterpolationOutOfRange(HausdorffError):
    """A grid-only function was probed outside its window."""


class ViolatedBound(HausdorffError):
    """An empirical quantity exceeded a proven bound beyond the allowed slack.

    Signals a bug, discretization leakage, or broken agreement hypotheses;
    never swallowed silently.
    """

    def __init__(self, message, descriptor=None):
        super().__init__(message)
        self.descriptor = descriptor or {}


class NotAnAtom(HausdorffError):
    """A constructed function failed atom verification beyond slack."""

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check


class MissingMetricFactor(HausdorffError):
    """The family declares no metric inflation factor k(u)."""


class MissingModulus(HausdorffError):
    """The family declares no measure modulus m(A(u))."""


class BudgetExceeded(HausdorffError):
    """Requested construction exceeds the configured node budget."""


class SingularMatrix(HausdorffError):
    """A matrix meant to act as an automorphism is not invertible."""


class CurveOriginViolation(HausdorffError):
    """A translation curve does not pass through the origin."""


class BoundaryNode(HausdorffError):
    """A parameter node sits on or beyond the boundary where the family degenerates."""
