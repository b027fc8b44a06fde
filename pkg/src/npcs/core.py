"""Data model, seeded randomness, sample splitting, and empirical error metrics.

Conventions used throughout the package:

* labels are 0/1 with class 0 the severe state whose type I error
  (misclassifying class 0 as 1) is to be controlled;
* classifiers predict 1 iff score(x) strictly exceeds the threshold, so
  ties at the threshold predict 0;
* every stochastic operation takes an explicit :class:`Seed`; there is no
  ambient global randomness.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import EmptyClassError, InsufficientClass0Error


@dataclass(frozen=True)
class LabeledSample:
    """Feature matrix with binary labels; the universal dataset carrier."""

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        features = np.asarray(self.features, dtype=np.float64)
        if features.ndim != 2:
            raise ValueError(f"features must be 2-d, got shape {features.shape}")
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1:
            raise ValueError(f"labels must be 1-d, got shape {labels.shape}")
        if features.shape[0] != labels.shape[0]:
            raise ValueError(
                f"row mismatch: {features.shape[0]} feature rows, "
                f"{labels.shape[0]} labels"
            )
        if features.shape[0] < 1 or features.shape[1] < 1:
            raise ValueError("need at least one row and one feature column")
        if not np.isin(labels, (0, 1)).all():
            raise ValueError("labels must all be 0 or 1")
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    @property
    def n0(self) -> int:
        return int(np.count_nonzero(self.labels == 0))

    @property
    def n1(self) -> int:
        return int(np.count_nonzero(self.labels == 1))

    def class_rows(self, cls: int) -> np.ndarray:
        """Feature rows of one class, in original order."""
        return self.features[self.labels == cls]

    def subset(self, indices) -> "LabeledSample":
        indices = np.asarray(indices, dtype=np.intp)
        return LabeledSample(self.features[indices], self.labels[indices])


@dataclass(frozen=True)
class ErrorReport:
    """Empirical type I/II errors with sample-proportion priors."""

    type1: float
    type2: float
    overall: float
    pi0_hat: float
    pi1_hat: float


@dataclass(frozen=True)
class Seed:
    """Deterministic randomness handle.

    Identical (value, stream) pairs always produce identical pseudo-random
    output, and :meth:`child` seeds are a pure function of
    (value, stream, k), so parallel and serial schedules that assign one
    child per sub-task give identical results.
    """

    value: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.value < 2**64:
            raise ValueError("seed value must be a 64-bit unsigned integer")
        if self.stream < 0:
            raise ValueError("stream counter must be non-negative")

    def rng(self) -> np.random.Generator:
        """Fresh PCG64 generator for this (value, stream) pair."""
        return np.random.Generator(
            np.random.PCG64(np.random.SeedSequence((self.value, self.stream)))
        )

    def child(self, k: int) -> "Seed":
        """Derived seed for sub-task k, a pure function of (value, stream, k)."""
        if k < 0:
            raise ValueError("sub-task index must be non-negative")
        # a keyed 64-bit digest keeps the stream bounded at any derivation
        # depth; distinct (stream, k) pairs collide only with probability
        # 2**-64 per pair
        digest = hashlib.blake2b(
            f"{self.value}:{self.stream}:{k}".encode(), digest_size=8
        ).digest()
        return Seed(self.value, int.from_bytes(digest, "big"))


def class_priors(sample: LabeledSample) -> tuple[float, float]:
    """Sample class proportions (pi0_hat, pi1_hat)."""
    n = sample.n
    return sample.n0 / n, sample.n1 / n


def empirical_errors(classifier, sample: LabeledSample) -> ErrorReport:
    """Empirical type I/II/overall errors of a classifier on a sample.

    type1 is the fraction of class-0 rows predicted 1, type2 the fraction
    of class-1 rows predicted 0; the overall error weighs them by the
    sample class proportions.
    """
    if sample.n0 == 0 or sample.n1 == 0:
        raise EmptyClassError(
            "both classes must be present to compute conditional errors "
            f"(n0={sample.n0}, n1={sample.n1})"
        )
    predicted = np.asarray(classifier.predict(sample.features))
    is0 = sample.labels == 0
    type1 = float(np.mean(predicted[is0] == 1))
    type2 = float(np.mean(predicted[~is0] == 0))
    pi0_hat, pi1_hat = class_priors(sample)
    overall = pi0_hat * type1 + pi1_hat * type2
    return ErrorReport(type1, type2, overall, pi0_hat, pi1_hat)


def split_class0(
    sample: LabeledSample, leftout_size: int, seed: Seed
) -> tuple[LabeledSample, LabeledSample]:
    """Randomly withhold class-0 rows.

    Returns (mixed, leftout0) where leftout0 contains exactly
    ``leftout_size`` class-0 rows drawn uniformly without replacement and
    mixed contains everything else. The union of rows equals the input.
    """
    n0 = sample.n0
    if leftout_size < 1:
        raise InsufficientClass0Error(
            f"leftout_size must be >= 1, got {leftout_size}"
        )
    if leftout_size >= n0:
        raise InsufficientClass0Error(
            f"cannot leave out {leftout_size} of {n0} class-0 rows; at least "
            "one class-0 row must remain for training"
        )
    idx0 = np.flatnonzero(sample.labels == 0)
    rng = seed.rng()
    picked = rng.choice(idx0.shape[0], size=leftout_size, replace=False)
    mask = np.zeros(idx0.shape[0], dtype=bool)
    mask[picked] = True
    leftout_rows = np.sort(idx0[mask])
    keep = np.ones(sample.n, dtype=bool)
    keep[leftout_rows] = False
    return sample.subset(np.flatnonzero(keep)), sample.subset(leftout_rows)
