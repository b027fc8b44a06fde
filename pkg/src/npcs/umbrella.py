"""Order-statistic threshold selection with a binomial violation bound.

Given a scoring function and a left-out class-0 sample of size m, the
classifier 1(s(x) > T_(k)) built on the k-th smallest left-out score has

    P(population type I error > alpha) <= v(k)
    v(k) = sum_{j=k}^{m} C(m, j) (1 - alpha)^j alpha^(m - j),

the upper tail of a Binomial(m, 1 - alpha). Picking the smallest k with
v(k) <= delta controls the violation probability at delta while keeping
the type II error as small as the guarantee allows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc, gammaln

from .classifiers import ScoringFunction, ThresholdClassifier
from .core import LabeledSample
from .errors import MinSampleSizeError, NonClass0RowsError


@dataclass(frozen=True)
class NpSettings:
    """Target type I error upper bound and target violation rate."""

    alpha: float
    delta: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must be in (0, 1), got {self.delta}")


@dataclass(frozen=True)
class NpResult:
    classifier: ThresholdClassifier
    k_star: int
    threshold: float
    bound: float
    m: int


def _tail_logspace(k: int, m: int, alpha: float) -> float:
    # log-space term summation; fallback when the beta route misbehaves
    j = np.arange(k, m + 1, dtype=np.float64)
    logs = (
        gammaln(m + 1.0)
        - gammaln(j + 1.0)
        - gammaln(m - j + 1.0)
        + j * math.log1p(-alpha)
        + (m - j) * math.log(alpha)
    )
    peak = float(np.max(logs))
    return float(np.exp(peak) * np.sum(np.exp(logs - peak)))


def violation_bound(k, m: int, alpha: float):
    """Binomial upper tail P(Bin(m, 1 - alpha) >= k).

    Evaluated through the regularized incomplete beta identity
    P(Bin(m, p) >= k) = I_p(k, m - k + 1); a log-space summation covers
    any value the beta route cannot produce. Accepts a scalar k or an
    array of orders.
    """
    k_arr = np.asarray(k)
    if np.any(k_arr < 1) or np.any(k_arr > m):
        raise ValueError(f"k must lie in [1, m]={[1, m]}, got {k}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    v = betainc(k_arr, m - k_arr + 1, 1.0 - alpha)
    if np.isscalar(k) or k_arr.ndim == 0:
        v = float(v)
        if not math.isfinite(v):
            v = _tail_logspace(int(k), m, alpha)
        return min(max(v, 0.0), 1.0)
    bad = ~np.isfinite(v)
    if bad.any():
        v = np.array(v, dtype=np.float64)
        for i in np.flatnonzero(bad):
            v[i] = _tail_logspace(int(k_arr[i]), m, alpha)
    return np.clip(v, 0.0, 1.0)


def min_feasible_m(alpha: float, delta: float) -> int:
    """Smallest m with (1 - alpha)^m <= delta."""
    guess = math.ceil(math.log(delta) / math.log1p(-alpha))
    # float ceil can land one off on exact boundaries; settle by direct check
    while guess > 1 and math.pow(1.0 - alpha, guess - 1) <= delta:
        guess -= 1
    while math.pow(1.0 - alpha, guess) > delta:
        guess += 1
    return guess


def np_order(m: int, alpha: float, delta: float) -> int:
    """Minimal k in [1, m] with violation_bound(k, m, alpha) <= delta."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if math.pow(1.0 - alpha, m) > delta:
        raise MinSampleSizeError(m, alpha, delta, min_feasible_m(alpha, delta))
    ks = np.arange(1, m + 1)
    v = violation_bound(ks, m, alpha)
    return int(ks[np.argmax(v <= delta)])


def np_classifier(
    scorer: ScoringFunction, leftout0: LabeledSample, settings: NpSettings
) -> NpResult:
    """Assemble the umbrella classifier from a trained scorer.

    Scores the left-out class-0 rows, sorts them ascending (stable, so
    ties keep their order), and thresholds at the k*-th order statistic.
    """
    if np.any(leftout0.labels != 0):
        raise NonClass0RowsError(
            "the left-out sample used for threshold selection must be all class 0"
        )
    m = leftout0.n
    k_star = np_order(m, settings.alpha, settings.delta)
    scores = np.sort(np.asarray(scorer.score(leftout0.features)), kind="stable")
    threshold = float(scores[k_star - 1])
    return NpResult(
        classifier=ThresholdClassifier(scorer, threshold),
        k_star=k_star,
        threshold=threshold,
        bound=violation_bound(k_star, m, settings.alpha),
        m=m,
    )
