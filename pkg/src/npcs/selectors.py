"""Cost-selection algorithms targeting a type I error upper bound.

All three selectors walk an ascending grid of candidate type I error
costs and pick the smallest cost whose estimated type I error (empirical
for the vanilla selector, TUBE or TUBEc estimates for the others) meets
the target alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classifiers import CostPair, ThresholdClassifier, build_cs_classifier
from .core import LabeledSample, Seed, split_class0
from .errors import NoFeasibleCostError
from .tube import tube, tubec


@dataclass(frozen=True)
class CostGrid:
    """Strictly increasing candidate type I error costs."""

    values: tuple

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if len(values) == 0:
            raise ValueError("cost grid must not be empty")
        if any(not 0.0 < v < 1.0 for v in values):
            raise ValueError("all candidate costs must lie in (0, 1)")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("cost grid must be strictly increasing")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def default_grid() -> CostGrid:
    """Candidate costs 0.51, 0.53, ..., 0.99 (25 values)."""
    return CostGrid(tuple(i / 100.0 for i in range(51, 100, 2)))


@dataclass(frozen=True)
class SelectionResult:
    classifier: ThresholdClassifier
    chosen_c0: float
    chosen_index: int
    selector: str
    estimates: tuple
    fallback: bool = False
    extra: dict = field(default_factory=dict)


def _split_half(sample: LabeledSample, seed: Seed):
    leftout_size = sample.n0 // 2
    return split_class0(sample, leftout_size, seed)


def vanilla_cs(
    sample: LabeledSample,
    alpha: float,
    grid: CostGrid,
    approach,
    method,
    seed: Seed,
    stratify_mode="oversample0",
) -> SelectionResult:
    """Pick the cheapest cost whose empirical type I error meets alpha.

    Class 0 is split in half; candidates train on one half (plus all of
    class 1) and are scored on the other. When even the largest cost
    misses the target the largest candidate is returned and flagged.
    """
    mixed, leftout = _split_half(sample, seed.child(0))
    x0 = leftout.features
    classifiers = []
    r = []
    for i, c0 in enumerate(grid):
        clf = build_cs_classifier(
            mixed, CostPair(c0), approach, method, seed.child(i + 1),
            stratify_mode=stratify_mode,
        )
        classifiers.append(clf)
        scores = np.asarray(clf.scorer.score(x0))
        r.append(float(np.mean(scores > clf.threshold)))
    costs = list(grid)
    if r[-1] <= alpha:
        i_star = next(i for i, ri in enumerate(r) if ri <= alpha)
        fallback = False
    else:
        i_star = len(costs) - 1
        fallback = True
    return SelectionResult(
        classifier=classifiers[i_star],
        chosen_c0=costs[i_star],
        chosen_index=i_star,
        selector="vanilla-cs",
        estimates=tuple(r),
        fallback=fallback,
    )


def tube_cs(
    sample: LabeledSample,
    alpha: float,
    grid: CostGrid,
    delta: float,
    approach,
    method,
    seed: Seed,
    B1: int = 30,
    B: int = 1000,
    leftout_fraction: float = 0.5,
    stratify_mode="oversample0",
) -> SelectionResult:
    """Pick the cheapest cost whose TUBE estimate meets alpha.

    Every candidate gets its own TUBE run on the full sample (splits are
    re-derived per candidate from sub-seeds so candidate estimates stay
    independent); the returned classifier is the full-sample fit at the
    chosen cost.
    """
    estimates = []
    full_classifiers = []
    for i, c0 in enumerate(grid):
        est, clf = tube(
            sample, CostPair(c0), approach, method, delta,
            B1=B1, B=B, leftout_fraction=leftout_fraction,
            seed=seed.child(i + 1), stratify_mode=stratify_mode,
        )
        estimates.append(est.value)
        full_classifiers.append(clf)
    costs = list(grid)
    feasible = [i for i, a in enumerate(estimates) if a <= alpha]
    if not feasible:
        raise NoFeasibleCostError(
            f"no candidate cost achieved a TUBE estimate <= alpha={alpha}",
            profile=list(zip(costs, estimates)),
        )
    i_star = feasible[0]
    return SelectionResult(
        classifier=full_classifiers[i_star],
        chosen_c0=costs[i_star],
        chosen_index=i_star,
        selector="tube-cs",
        estimates=tuple(estimates),
    )


def tubec_cs(
    sample: LabeledSample,
    alpha: float,
    grid: CostGrid,
    delta: float,
    approach,
    method,
    seed: Seed,
    B: int = 1000,
    leftout_fraction: float = 0.5,
    stratify_mode="oversample0",
) -> SelectionResult:
    """Pick the cheapest cost whose TUBEc estimate meets alpha.

    Class 0 is split once, outside the candidate loop; every candidate
    trains on the same mixed part and is bounded on the same left-out
    part. The chosen candidate classifier itself is returned (it saw only
    the split training data, unlike the tube_cs output).
    """
    if not 0.0 < leftout_fraction < 1.0:
        raise ValueError(f"leftout_fraction must be in (0, 1), got {leftout_fraction}")
    m = max(1, min(sample.n0 - 1, int(round(sample.n0 * leftout_fraction))))
    mixed, leftout = split_class0(sample, m, seed.child(0))
    estimates = []
    classifiers = []
    for i, c0 in enumerate(grid):
        s = seed.child(i + 1)
        clf = build_cs_classifier(
            mixed, CostPair(c0), approach, method, s.child(0),
            stratify_mode=stratify_mode,
        )
        classifiers.append(clf)
        estimates.append(tubec(clf, leftout, delta, B, s.child(1)).value)
    costs = list(grid)
    feasible = [i for i, a in enumerate(estimates) if a <= alpha]
    if not feasible:
        raise NoFeasibleCostError(
            f"no candidate cost achieved a TUBEc estimate <= alpha={alpha}",
            profile=list(zip(costs, estimates)),
        )
    i_star = feasible[0]
    return SelectionResult(
        classifier=classifiers[i_star],
        chosen_c0=costs[i_star],
        chosen_index=i_star,
        selector="tubec-cs",
        estimates=tuple(estimates),
    )
