"""Exception types shared across the package.

Every error raised intentionally by npcs derives from NpcsError so callers
(and the CLI exit-code mapping) can distinguish domain failures from bugs.
"""


class NpcsError(Exception):
    """Base class for all npcs domain errors."""


class EmptyClassError(NpcsError):
    """A class-conditional quantity was requested but the class is absent."""


class InsufficientClass0Error(NpcsError):
    """Not enough class-0 observations to perform the requested split."""


class NonConvergenceError(NpcsError):
    """Iterative fitting hit its iteration cap before converging."""

    def __init__(self, message, grad_norm=None):
        super().__init__(message)
        self.grad_norm = grad_norm


class DegenerateDesignError(NpcsError):
    """Design matrix is rank-deficient beyond what regularization can absorb."""


class SingularCovarianceError(NpcsError):
    """Covariance estimate stayed singular after regularization."""


class EmptyResultError(NpcsError):
    """A resampling step would produce an empty class."""


class IncompatibleApproachError(NpcsError):
    """Requested cost-sensitive approach does not apply to the given method."""


class MinSampleSizeError(NpcsError):
    """Left-out class-0 sample is too small for the (alpha, delta) target.

    Carries the smallest feasible sample size in ``required_m``.
    """

    def __init__(self, m, alpha, delta, required_m):
        super().__init__(
            f"left-out class-0 sample size m={m} cannot satisfy the violation "
            f"target: (1-alpha)^m > delta for alpha={alpha}, delta={delta}; "
            f"smallest feasible m is {required_m}"
        )
        self.m = m
        self.alpha = alpha
        self.delta = delta
        self.required_m = required_m


class NonClass0RowsError(NpcsError):
    """A sample that must contain only class-0 rows has class-1 rows."""


class EquivalenceBrokenError(NpcsError):
    """Mapped cost-sensitive classifier disagreed with its source classifier."""

    def __init__(self, message, index=None, score_np=None, score_cs=None):
        super().__init__(message)
        self.index = index
        self.score_np = score_np
        self.score_cs = score_cs


class MissingModelContextError(NpcsError):
    """Correspondence mapping lacks the model context it needs."""


class NoFeasibleCostError(NpcsError):
    """No candidate cost met the estimated type I error target.

    ``profile`` holds the per-candidate (cost, estimate) pairs.
    """

    def __init__(self, message, profile=None):
        super().__init__(message)
        self.profile = profile or []


class ParseError(NpcsError):
    """CSV input could not be parsed; carries row/column location when known."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class NonNumericFeatureError(ParseError):
    """A feature cell could not be parsed as a real number."""


class UnknownLabelValueError(ParseError):
    """Label column missing, or the class-0 value never occurs."""
