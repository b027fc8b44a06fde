"""Upper-bound estimators for a cost-sensitive classifier's type I error.

For a classifier 1(s(x) > t) treated as fixed, a left-out class-0 sample
defines a surrogate classifier thresholded at the largest order statistic
not exceeding t. Its type I error dominates the classifier's own, and the
surrogate's violation probability admits a closed-form bound in terms of
F(t), the class-0 score CDF at t. Inverting that bound for alpha at a
target violation rate delta, with F(t) replaced by bootstrap estimates,
gives the bootstrap estimator; plug-in and empirical baselines and the
full-sample bias-corrected variant are alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .classifiers import CostPair, ThresholdClassifier, build_cs_classifier
from .core import LabeledSample, Seed, split_class0
from .errors import NonClass0RowsError


class EstimatorKind(str, Enum):
    TUBEC = "tubec"
    TUBE = "tube"
    PLUG_IN = "plug-in"
    EMPIRICAL = "empirical"


@dataclass(frozen=True)
class AlphaEstimate:
    """An estimated type I error upper bound plus how it was produced."""

    value: float
    kind: EstimatorKind
    delta: float | None = None
    B: int | None = None
    B1: int | None = None
    diagnostics: dict = field(default_factory=dict)


def surrogate_delta(F_at_t: float, m: int, alpha: float) -> float:
    """Violation-probability bound of the surrogate classifier.

    Returns 1 when the threshold sits below the (1 - alpha) quantile of
    the class-0 score distribution (F_at_t < 1 - alpha); otherwise
    (2 - alpha - F)^m - (1 - F)^m.
    """
    if not 0.0 <= F_at_t <= 1.0:
        raise ValueError(f"F_at_t must be in [0, 1], got {F_at_t}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if F_at_t < 1.0 - alpha:
        return 1.0
    return (2.0 - alpha - F_at_t) ** m - (1.0 - F_at_t) ** m


def plugin_alpha(F_hat, m: int, delta: float):
    """Solve the surrogate bound for alpha at violation rate delta.

        alpha = 2 - F - [delta + (1 - F)^m]^(1/m)

    clamped into [0, 1]. Accepts a scalar or an array of F values.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must be in (0, 1), got {delta}")
    f = np.asarray(F_hat, dtype=np.float64)
    if np.any(f < 0.0) or np.any(f > 1.0):
        raise ValueError("F_hat must lie in [0, 1]")
    val = 2.0 - f - (delta + (1.0 - f) ** m) ** (1.0 / m)
    val = np.clip(val, 0.0, 1.0)
    return float(val) if np.isscalar(F_hat) else val


def _require_class0(sample: LabeledSample, what: str):
    if np.any(sample.labels != 0):
        raise NonClass0RowsError(f"{what} expects a sample containing only class-0 rows")


def _quantile_index(delta: float, B: int) -> int:
    # ceil((1-delta)*B) as a 1-based order statistic; the small epsilon keeps
    # exact-integer products from rounding up through float error
    return min(B, max(1, math.ceil((1.0 - delta) * B - 1e-9)))


def _bootstrap_alpha_hats(scores, t_cs, delta, indices):
    """Per-bootstrap upper-bound estimates from resample index rows."""
    m = scores.shape[0]
    counts = np.count_nonzero(scores[indices] <= t_cs, axis=1)
    alpha_b = np.ones(indices.shape[0])
    covered = counts > 0
    if covered.any():
        alpha_b[covered] = plugin_alpha(counts[covered] / m, m, delta)
    return alpha_b


def tubec(
    classifier: ThresholdClassifier,
    leftout0: LabeledSample,
    delta: float,
    B: int = 1000,
    seed: Seed | None = None,
) -> AlphaEstimate:
    """Bootstrap upper-bound estimate on a left-out class-0 sample.

    Each bootstrap resamples the m left-out scores with replacement; when
    every resampled score exceeds the threshold the estimate for that
    draw is 1, otherwise the surrogate order k = #{scores <= t} feeds the
    closed form. The reported value is the (1-delta) quantile of the B
    per-bootstrap estimates.
    """
    _require_class0(leftout0, "tubec")
    if B < 1:
        raise ValueError(f"B must be >= 1, got {B}")
    if seed is None:
        seed = Seed(0)
    scores = np.asarray(classifier.scorer.score(leftout0.features))
    m = scores.shape[0]
    rng = seed.rng()
    indices = rng.integers(0, m, size=(B, m))
    alpha_b = _bootstrap_alpha_hats(scores, classifier.threshold, delta, indices)
    order = np.sort(alpha_b)
    value = float(order[_quantile_index(delta, B) - 1])
    return AlphaEstimate(
        value=value,
        kind=EstimatorKind.TUBEC,
        delta=delta,
        B=B,
        diagnostics={"alpha_b": alpha_b, "m": m},
    )


def empirical_alpha(
    classifier: ThresholdClassifier, class0: LabeledSample
) -> AlphaEstimate:
    """Empirical type I error of the classifier on a class-0 sample."""
    _require_class0(class0, "empirical_alpha")
    scores = np.asarray(classifier.scorer.score(class0.features))
    value = float(np.mean(scores > classifier.threshold))
    return AlphaEstimate(value=value, kind=EstimatorKind.EMPIRICAL)


def plugin_estimate(
    classifier: ThresholdClassifier, leftout0: LabeledSample, delta: float
) -> AlphaEstimate:
    """Closed-form estimate with F taken from the un-resampled scores."""
    _require_class0(leftout0, "plugin_estimate")
    scores = np.asarray(classifier.scorer.score(leftout0.features))
    m = scores.shape[0]
    f_hat = float(np.count_nonzero(scores <= classifier.threshold)) / m
    return AlphaEstimate(
        value=plugin_alpha(f_hat, m, delta),
        kind=EstimatorKind.PLUG_IN,
        delta=delta,
        diagnostics={"F_hat": f_hat, "m": m},
    )


def _empirical_type1(classifier: ThresholdClassifier, sample: LabeledSample) -> float:
    """Fraction of the sample's class-0 rows predicted 1."""
    x0 = sample.class_rows(0)
    scores = np.asarray(classifier.scorer.score(x0))
    return float(np.mean(scores > classifier.threshold))


def tube(
    sample: LabeledSample,
    costs: CostPair,
    approach,
    method,
    delta: float,
    B1: int = 30,
    B: int = 1000,
    leftout_fraction: float = 0.5,
    seed: Seed | None = None,
    stratify_mode="oversample0",
) -> tuple[AlphaEstimate, ThresholdClassifier]:
    """Full-sample upper-bound estimate via split-based bias correction.

    Trains the cost-sensitive classifier on all of the data, takes its
    training-sample empirical type I error, and corrects it upward by the
    average gap between split-trained classifiers' bootstrap estimates
    and their own training-sample empirical type I errors over B1 random
    class-0 splits.
    """
    if B1 < 1:
        raise ValueError(f"B1 must be >= 1, got {B1}")
    if not 0.0 < leftout_fraction < 1.0:
        raise ValueError(f"leftout_fraction must be in (0, 1), got {leftout_fraction}")
    if seed is None:
        seed = Seed(0)
    full = build_cs_classifier(
        sample, costs, approach, method, seed.child(0), stratify_mode=stratify_mode
    )
    alpha_tilde = _empirical_type1(full, sample)
    m = max(1, min(sample.n0 - 1, int(round(sample.n0 * leftout_fraction))))
    tubec_parts = np.empty(B1)
    emp_parts = np.empty(B1)
    for b1 in range(B1):
        s = seed.child(b1 + 1)
        mixed, leftout = split_class0(sample, m, s.child(0))
        clf = build_cs_classifier(
            mixed, costs, approach, method, s.child(1), stratify_mode=stratify_mode
        )
        tubec_parts[b1] = tubec(clf, leftout, delta, B, s.child(2)).value
        emp_parts[b1] = _empirical_type1(clf, mixed)
    value = alpha_tilde + float(np.mean(tubec_parts - emp_parts))
    value = min(1.0, max(0.0, value))
    estimate = AlphaEstimate(
        value=value,
        kind=EstimatorKind.TUBE,
        delta=delta,
        B=B,
        B1=B1,
        diagnostics={
            "alpha_tilde": alpha_tilde,
            "tubec_splits": tubec_parts,
            "empirical_splits": emp_parts,
        },
    )
    return estimate, full
