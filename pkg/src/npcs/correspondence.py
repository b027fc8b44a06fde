"""Exact cost maps turning an NP-thresholded classifier into a CS one.

Two cost-sensitive implementations can reproduce an NP classifier built
on a posterior scorer exactly: rebalancing (swap the training priors for
mapped costs, threshold at 1/2) and post-training (keep the scorer,
threshold at the mapped cost). Both maps come with a point-by-point
prediction equivalence check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classifiers import (
    CsApproach,
    GenerativeModel,
    PosteriorScorer,
    ThresholdClassifier,
    posterior_score,
)
from .core import LabeledSample
from .errors import EquivalenceBrokenError, MissingModelContextError
from .umbrella import NpResult

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class CorrespondenceResult:
    c0: float
    approach: CsApproach
    cs_classifier: ThresholdClassifier
    equivalence_checked: bool
    n_checked: int = 0
    n_excluded: int = 0


def rebalance_cost(t_np: float, pi0_hat: float) -> float:
    """Cost whose rebalanced posterior thresholded at 1/2 matches threshold t_np.

        c0 = t * pi0 / ((1 - t) * (1 - pi0) + t * pi0)
    """
    if not 0.0 <= t_np <= 1.0:
        raise ValueError(f"t_np must be in [0, 1], got {t_np}")
    if not 0.0 < pi0_hat < 1.0:
        raise ValueError(f"pi0_hat must be in (0, 1), got {pi0_hat}")
    return t_np * pi0_hat / ((1.0 - t_np) * (1.0 - pi0_hat) + t_np * pi0_hat)


def posttrain_cost(t_np: float) -> float:
    """Thresholding the same posterior at c0 = t_np is the identity map."""
    if not 0.0 <= t_np <= 1.0:
        raise ValueError(f"t_np must be in [0, 1], got {t_np}")
    return t_np


def _verify_equivalence(np_classifier, cs_classifier, features, boundary_tol):
    """Compare predictions point by point, skipping a tiny boundary band.

    Points whose NP score sits within boundary_tol of the NP threshold are
    numerically ambiguous (the two classifiers cut the same decision set
    along differently rounded constants) and are excluded.
    """
    np_scores = np.asarray(np_classifier.scorer.score(features))
    cs_scores = np.asarray(cs_classifier.scorer.score(features))
    keep = np.abs(np_scores - np_classifier.threshold) >= boundary_tol
    np_pred = np_scores > np_classifier.threshold
    cs_pred = cs_scores > cs_classifier.threshold
    disagree = keep & (np_pred != cs_pred)
    if disagree.any():
        i = int(np.argmax(disagree))
        raise EquivalenceBrokenError(
            f"mapped CS classifier disagrees with the NP classifier at row {i}: "
            f"np score {np_scores[i]!r} vs threshold {np_classifier.threshold!r}, "
            f"cs score {cs_scores[i]!r} vs threshold {cs_classifier.threshold!r}",
            index=i,
            score_np=float(np_scores[i]),
            score_cs=float(cs_scores[i]),
        )
    n = features.shape[0]
    return n, int(n - np.count_nonzero(keep))


def np_to_cs(
    np_result: NpResult,
    model_context,
    approach,
    verify_on: LabeledSample | None = None,
    boundary_tol: float = BOUNDARY_TOL,
) -> CorrespondenceResult:
    """Map an NP classifier to an equivalent cost-sensitive classifier.

    Rebalancing needs the generative model behind the NP scorer (pass it
    as model_context); post-training just needs the NP scorer to be a
    posterior, so model_context may be None. When verify_on is given the
    two classifiers' predictions are compared on its rows and any
    disagreement outside the boundary band raises.
    """
    approach = CsApproach(approach)
    t_np = np_result.threshold
    if approach == CsApproach.REBALANCING:
        if not isinstance(model_context, GenerativeModel):
            raise MissingModelContextError(
                "rebalancing correspondence needs the generative model "
                "behind the NP scoring function"
            )
        c0 = rebalance_cost(t_np, model_context.pi0)
        scorer = posterior_score(model_context, (c0, 1.0 - c0))
        cs = ThresholdClassifier(scorer, 0.5)
    elif approach == CsApproach.POST_TRAINING:
        scorer = (
            model_context if model_context is not None
            else np_result.classifier.scorer
        )
        if not getattr(scorer, "is_posterior", False):
            raise MissingModelContextError(
                "post-training correspondence needs a posterior scorer in [0, 1]"
            )
        c0 = posttrain_cost(t_np)
        cs = ThresholdClassifier(scorer, c0)
    else:
        raise ValueError(
            "correspondence is defined for rebalancing and post-training, "
            f"not {approach.value}"
        )
    checked = False
    n_checked = 0
    n_excluded = 0
    if verify_on is not None:
        n_checked, n_excluded = _verify_equivalence(
            np_result.classifier, cs, verify_on.features, boundary_tol
        )
        checked = True
    return CorrespondenceResult(
        c0=c0,
        approach=approach,
        cs_classifier=cs,
        equivalence_checked=checked,
        n_checked=n_checked,
        n_excluded=n_excluded,
    )
