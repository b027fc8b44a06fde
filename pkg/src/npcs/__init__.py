"""Asymmetric binary classification with type I error control.

Class 0 is the severe state throughout: the type I error is the
probability of predicting 1 on a class-0 observation, and every tool in
this package either controls it (order-statistic thresholding, cost
selection) or estimates a high-probability upper bound on it (bootstrap
and bias-corrected estimators).
"""

__version__ = "0.1.0"

from .classifiers import (
    ConstantScorer,
    CostPair,
    CsApproach,
    ExternalScorer,
    GenerativeModel,
    LogisticScorer,
    PosteriorScorer,
    ScoringFunction,
    StratifyMode,
    ThresholdClassifier,
    build_cs_classifier,
    classifier_from_dict,
    fit_scorer,
    posterior_score,
    scorer_from_dict,
    stratify,
    train_generative,
    train_logistic,
)
from .core import (
    ErrorReport,
    LabeledSample,
    Seed,
    class_priors,
    empirical_errors,
    split_class0,
)
from .correspondence import (
    CorrespondenceResult,
    np_to_cs,
    posttrain_cost,
    rebalance_cost,
)
from .selectors import CostGrid, SelectionResult, default_grid, tube_cs, tubec_cs, vanilla_cs
from .simgen import (
    DistributionSpec,
    ExperimentConfig,
    ExperimentReport,
    generate,
    generate_class,
    preset_configs,
    run_experiment,
    split_benchmark,
    violation_rate,
)
from .tube import (
    AlphaEstimate,
    EstimatorKind,
    empirical_alpha,
    plugin_alpha,
    plugin_estimate,
    surrogate_delta,
    tube,
    tubec,
)
from .umbrella import (
    NpResult,
    NpSettings,
    min_feasible_m,
    np_classifier,
    np_order,
    violation_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
