"""Synthetic data generators and the Monte-Carlo experiment harness.

Three feature distributions are built in, each with equal class priors:

* gaussian -- class 0 standard normal, class 1 shifted in the first two
  coordinates with a tridiagonal covariance;
* t -- first two coordinates heavy-tailed (t with 3 degrees of freedom),
  class 0 shifted by (2.5, 2.5), class 1 centered, remaining coordinates
  standard normal;
* mixture -- class 0 an equal two-component normal mixture symmetric
  about the origin, class 1 one of the components.

The harness repeats a configured construction (NP thresholding, one of
the cost selectors, a fixed-cost build with its upper-bound estimate, or
the estimator-comparison and equivalence designs), records per-repetition
errors, and aggregates violation rates against the target alpha.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.special import expit

from .classifiers import (
    CostPair,
    ScoringFunction,
    build_cs_classifier,
    fit_scorer,
    posterior_score,
    train_generative,
    train_logistic,
)
from .core import LabeledSample, Seed, empirical_errors, split_class0
from .correspondence import np_to_cs
from .errors import NpcsError
from .selectors import CostGrid, tube_cs, tubec_cs, vanilla_cs
from .tube import empirical_alpha, plugin_estimate, tube, tubec
from .umbrella import NpSettings, np_classifier

DISTRIBUTION_KINDS = ("gaussian", "t", "mixture")
EXPERIMENT_KINDS = (
    "np",
    "vanilla-cs",
    "tube-cs",
    "tubec-cs",
    "cs-fixed",
    "tubec-estimators",
    "equivalence",
)

JOBS_ENV_VAR = "NPCS_JOBS"


@dataclass(frozen=True)
class DistributionSpec:
    kind: str
    d: int = 30
    shared_t_denominator: bool = True

    def __post_init__(self):
        if self.kind not in DISTRIBUTION_KINDS:
            raise ValueError(
                f"kind must be one of {DISTRIBUTION_KINDS}, got {self.kind!r}"
            )
        minimum = 3 if self.kind == "t" else 2
        if self.d < minimum:
            raise ValueError(f"{self.kind} needs d >= {minimum}, got {self.d}")


def _gaussian_sigma1(d: int) -> np.ndarray:
    sigma = np.eye(d)
    off = np.arange(d - 1)
    sigma[off, off + 1] = 0.5
    sigma[off + 1, off] = 0.5
    return sigma


def _draw_features(spec: DistributionSpec, cls: int, n: int, rng) -> np.ndarray:
    d = spec.d
    if spec.kind == "gaussian":
        z = rng.standard_normal((n, d))
        if cls == 0:
            return z
        mu = np.zeros(d)
        mu[:2] = 1.5
        return mu + z @ np.linalg.cholesky(_gaussian_sigma1(d)).T
    if spec.kind == "t":
        # class 0 carries the (2.5, 2.5) shift here, class 1 is centered
        shift = 2.5 if cls == 0 else 0.0
        z = rng.standard_normal((n, 2))
        if spec.shared_t_denominator:
            w = rng.chisquare(3.0, size=n)[:, None]
        else:
            w = rng.chisquare(3.0, size=(n, 2))
        heavy = shift + z / np.sqrt(w / 3.0)
        rest = rng.standard_normal((n, d - 2))
        return np.hstack([heavy, rest])
    # mixture
    a = 2.0 / np.sqrt(d)
    z = rng.standard_normal((n, d))
    if cls == 1:
        return a + z
    sign = np.where(rng.random(n) < 0.5, a, -a)
    return sign[:, None] + z


def generate(spec: DistributionSpec, n: int, seed: Seed) -> LabeledSample:
    """Mixed sample with i.i.d. Bernoulli(1/2) labels."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = seed.rng()
    labels = (rng.random(n) < 0.5).astype(np.int64)
    features = np.empty((n, spec.d))
    mask0 = labels == 0
    n0 = int(np.count_nonzero(mask0))
    if n0:
        features[mask0] = _draw_features(spec, 0, n0, rng)
    if n - n0:
        features[~mask0] = _draw_features(spec, 1, n - n0, rng)
    return LabeledSample(features, labels)


def generate_class(spec: DistributionSpec, cls: int, n: int, seed: Seed) -> LabeledSample:
    """Single-class sample (used for left-out and class-conditional draws)."""
    if cls not in (0, 1):
        raise ValueError(f"cls must be 0 or 1, got {cls}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    features = _draw_features(spec, cls, n, seed.rng())
    return LabeledSample(features, np.full(n, cls, dtype=np.int64))


def violation_rate(errors, alpha: float) -> float:
    """Fraction of entries strictly exceeding alpha."""
    errors = np.asarray(errors, dtype=np.float64)
    if errors.size == 0:
        raise ValueError("violation_rate needs a non-empty list")
    return float(np.mean(errors > alpha))


# ---------------------------------------------------------------------------
# experiment configuration and report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    dist: DistributionSpec
    n_train: int
    n_eval: int
    reps: int
    alpha: float
    delta: float
    methods: tuple = ("lr",)
    approach: str = "stratification"
    stratify_mode: str = "oversample0"
    grid: tuple | None = None
    c0: float | None = None
    leftout_size: int | None = None
    leftout_fraction: float = 0.5
    m_leftout: int | None = None
    B: int = 1000
    B1: int = 30
    seed: int = 0

    def __post_init__(self):
        if self.kind not in EXPERIMENT_KINDS:
            raise ValueError(
                f"kind must be one of {EXPERIMENT_KINDS}, got {self.kind!r}"
            )
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.n_eval < 10 * self.n_train:
            raise ValueError(
                "n_eval must be at least 10x n_train for a usable population proxy"
            )
        if not self.methods:
            raise ValueError("at least one method is required")
        if self.kind in ("vanilla-cs", "tube-cs", "tubec-cs") and not self.grid:
            raise ValueError(f"{self.kind} needs a cost grid")
        if self.kind in ("cs-fixed", "tubec-estimators") and self.c0 is None:
            raise ValueError(f"{self.kind} needs a fixed cost c0")
        if self.kind == "tubec-estimators" and self.m_leftout is None:
            raise ValueError("tubec-estimators needs the left-out sample size")

    def to_dict(self) -> dict:
        out = asdict(self)
        out["methods"] = list(self.methods)
        out["grid"] = None if self.grid is None else list(self.grid)
        return out


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    records: list
    aggregates: dict
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "records": self.records,
            "aggregates": self.aggregates,
        }


def _leftout_count(config: ExperimentConfig, n0: int) -> int:
    if config.leftout_size is not None:
        return config.leftout_size
    return max(1, min(n0 - 1, int(round(n0 * config.leftout_fraction))))


def _eval_errors(classifier, sample) -> tuple[float, float]:
    report = empirical_errors(classifier, sample)
    return report.type1, report.type2


# ---------------------------------------------------------------------------
# per-repetition runners (one record per (rep, method))
# ---------------------------------------------------------------------------


def _method_records(config, rep, body):
    """Run one callable per method, isolating domain errors per method."""
    records = []
    for mi, method in enumerate(config.methods):
        base = {"rep": rep, "method": _method_name(method)}
        try:
            base.update(body(mi, method))
        except NpcsError as exc:
            base["error"] = str(exc)
            base["error_kind"] = type(exc).__name__
        records.append(base)
    return records


def _method_name(method) -> str:
    if isinstance(method, ScoringFunction):
        return getattr(method, "name", method.method)
    return str(method)


def _rep_np(config, fixtures, rep_seed, rep):
    train = generate(config.dist, config.n_train, rep_seed.child(0))
    ev = generate(config.dist, config.n_eval, rep_seed.child(1))
    mixed, leftout = split_class0(
        train, _leftout_count(config, train.n0), rep_seed.child(2)
    )
    settings = NpSettings(config.alpha, config.delta)

    def body(mi, method):
        scorer = fit_scorer(mixed, method)
        result = np_classifier(scorer, leftout, settings)
        emp = float(
            np.mean(np.asarray(scorer.score(leftout.features)) > result.threshold)
        )
        t1, t2 = _eval_errors(result.classifier, ev)
        return {
            "k_star": result.k_star,
            "threshold": result.threshold,
            "bound": result.bound,
            "emp_type1": emp,
            "eval_type1": t1,
            "eval_type2": t2,
        }

    return _method_records(config, rep, body)


def _rep_vanilla(config, fixtures, rep_seed, rep):
    train = generate(config.dist, config.n_train, rep_seed.child(0))
    ev = generate(config.dist, config.n_eval, rep_seed.child(1))
    grid = CostGrid(config.grid)

    def body(mi, method):
        sel = vanilla_cs(
            train, config.alpha, grid, config.approach, method,
            rep_seed.child(2 + mi), stratify_mode=config.stratify_mode,
        )
        t1, t2 = _eval_errors(sel.classifier, ev)
        return {
            "chosen_c0": sel.chosen_c0,
            "fallback": sel.fallback,
            "emp_type1": sel.estimates[sel.chosen_index],
            "eval_type1": t1,
            "eval_type2": t2,
        }

    return _method_records(config, rep, body)


def _rep_selector(config, fixtures, rep_seed, rep):
    train = generate(config.dist, config.n_train, rep_seed.child(0))
    ev = generate(config.dist, config.n_eval, rep_seed.child(1))
    grid = CostGrid(config.grid)

    def body(mi, method):
        if config.kind == "tube-cs":
            sel = tube_cs(
                train, config.alpha, grid, config.delta, config.approach, method,
                rep_seed.child(2 + mi), B1=config.B1, B=config.B,
                leftout_fraction=config.leftout_fraction,
                stratify_mode=config.stratify_mode,
            )
        else:
            sel = tubec_cs(
                train, config.alpha, grid, config.delta, config.approach, method,
                rep_seed.child(2 + mi), B=config.B,
                leftout_fraction=config.leftout_fraction,
                stratify_mode=config.stratify_mode,
            )
        t1, t2 = _eval_errors(sel.classifier, ev)
        return {
            "chosen_c0": sel.chosen_c0,
            "alpha_hat": sel.estimates[sel.chosen_index],
            "eval_type1": t1,
            "eval_type2": t2,
        }

    return _method_records(config, rep, body)


def _rep_cs_fixed(config, fixtures, rep_seed, rep):
    train = generate(config.dist, config.n_train, rep_seed.child(0))
    ev = generate(config.dist, config.n_eval, rep_seed.child(1))
    costs = CostPair(config.c0)

    def body(mi, method):
        estimate, clf = tube(
            train, costs, config.approach, method, config.delta,
            B1=config.B1, B=config.B,
            leftout_fraction=config.leftout_fraction,
            seed=rep_seed.child(2 + mi), stratify_mode=config.stratify_mode,
        )
        t1, t2 = _eval_errors(clf, ev)
        return {
            "c0": config.c0,
            "tube_alpha": estimate.value,
            "alpha_tilde": float(estimate.diagnostics["alpha_tilde"]),
            "eval_type1": t1,
            "eval_type2": t2,
        }

    return _method_records(config, rep, body)


def _rep_tubec_estimators(config, fixtures, rep_seed, rep):
    leftout = generate_class(config.dist, 0, config.m_leftout, rep_seed.child(0))

    def body(mi, method):
        clf = fixtures["classifiers"][mi]
        est_tubec = tubec(clf, leftout, config.delta, config.B, rep_seed.child(1 + mi))
        est_emp = empirical_alpha(clf, leftout)
        est_plug = plugin_estimate(clf, leftout, config.delta)
        return {
            "tubec": est_tubec.value,
            "empirical": est_emp.value,
            "plugin": est_plug.value,
            "eval_type1": fixtures["eval_type1"][mi],
        }

    return _method_records(config, rep, body)


_EQUIVALENCE_APPROACH = {
    "lda": "rebalancing",
    "qda": "rebalancing",
    "gnb": "rebalancing",
    "lr": "post-training",
}


def _conditional_errors(scores, labels, threshold):
    pred1 = scores > threshold
    type1 = float(np.mean(pred1[labels == 0]))
    type2 = float(np.mean(~pred1[labels == 1]))
    return type1, type2


def _rep_equivalence(config, fixtures, rep_seed, rep):
    train = generate(config.dist, config.n_train, rep_seed.child(0))
    ev = generate(config.dist, config.n_eval, rep_seed.child(1))
    mixed, leftout = split_class0(
        train, _leftout_count(config, train.n0), rep_seed.child(2)
    )
    settings = NpSettings(config.alpha, config.delta)
    boundary_tol = 1e-12

    def body(mi, method):
        approach = _EQUIVALENCE_APPROACH[str(method)]
        if approach == "rebalancing":
            model = train_generative(mixed, str(method))
            scorer = posterior_score(model)
            context = model
        else:
            scorer = train_logistic(mixed, 1.0, 1.0)
            context = scorer
        result = np_classifier(scorer, leftout, settings)
        corr = np_to_cs(result, context, approach)
        # score the eval rows once; the rebalanced posterior shares the
        # model's log ratio with the NP posterior, so one density sweep
        # covers both classifiers
        if approach == "rebalancing":
            delta = model.log_ratio(ev.features)
            np_scores = expit(delta + scorer.prior_shift)
            cs_scores = expit(delta + corr.cs_classifier.scorer.prior_shift)
        else:
            np_scores = np.asarray(scorer.score(ev.features))
            cs_scores = np_scores
        keep = np.abs(np_scores - result.threshold) >= boundary_tol
        np_pred = np_scores > result.threshold
        cs_pred = cs_scores > corr.cs_classifier.threshold
        disagreements = int(np.count_nonzero(keep & (np_pred != cs_pred)))
        np_t1, np_t2 = _conditional_errors(np_scores, ev.labels, result.threshold)
        cs_t1, cs_t2 = _conditional_errors(
            cs_scores, ev.labels, corr.cs_classifier.threshold
        )
        return {
            "approach": approach,
            "t_np": result.threshold,
            "c0": corr.c0,
            "disagreements": disagreements,
            "excluded": int(ev.n - np.count_nonzero(keep)),
            "np_eval_type1": np_t1,
            "np_eval_type2": np_t2,
            "cs_eval_type1": cs_t1,
            "cs_eval_type2": cs_t2,
        }

    return _method_records(config, rep, body)


_RUNNERS = {
    "np": _rep_np,
    "vanilla-cs": _rep_vanilla,
    "tube-cs": _rep_selector,
    "tubec-cs": _rep_selector,
    "cs-fixed": _rep_cs_fixed,
    "tubec-estimators": _rep_tubec_estimators,
    "equivalence": _rep_equivalence,
}


def _build_fixtures(config: ExperimentConfig):
    """Per-experiment state shared by every repetition."""
    if config.kind != "tubec-estimators":
        return None
    fixture_seed = Seed(config.seed).child(0)
    train = generate(config.dist, config.n_train, fixture_seed.child(0))
    classifiers = []
    eval_type1 = []
    for mi, method in enumerate(config.methods):
        clf = build_cs_classifier(
            train, CostPair(config.c0), config.approach, method,
            fixture_seed.child(1 + mi), stratify_mode=config.stratify_mode,
        )
        classifiers.append(clf)
        eval0 = generate_class(
            config.dist, 0, config.n_eval, fixture_seed.child(100 + mi)
        )
        scores = np.asarray(clf.scorer.score(eval0.features))
        eval_type1.append(float(np.mean(scores > clf.threshold)))
    return {"classifiers": classifiers, "eval_type1": eval_type1}


def _run_rep(packed):
    config, fixtures, rep = packed
    rep_seed = Seed(config.seed).child(rep + 1)
    try:
        return _RUNNERS[config.kind](config, fixtures, rep_seed, rep)
    except NpcsError as exc:
        return [{"rep": rep, "error": str(exc), "error_kind": type(exc).__name__}]


# ---------------------------------------------------------------------------
# aggregation
# ---------------------------------------------------------------------------


def _collect(records, method, key):
    return np.asarray(
        [r[key] for r in records if r.get("method") == method and "error" not in r],
        dtype=np.float64,
    )


def _aggregate(config: ExperimentConfig, records) -> dict:
    by_method = {}
    for method in config.methods:
        name = _method_name(method)
        ok = [r for r in records if r.get("method") == name and "error" not in r]
        if not ok:
            by_method[name] = {"n": 0}
            continue
        agg = {"n": len(ok)}
        if config.kind in ("np", "vanilla-cs", "tube-cs", "tubec-cs"):
            ev1 = _collect(records, name, "eval_type1")
            agg["eval_violation_rate"] = violation_rate(ev1, config.alpha)
            agg["median_eval_type1"] = float(np.median(ev1))
            agg["median_eval_type2"] = float(
                np.median(_collect(records, name, "eval_type2"))
            )
            if config.kind in ("np", "vanilla-cs"):
                agg["emp_violation_rate"] = violation_rate(
                    _collect(records, name, "emp_type1"), config.alpha
                )
            if config.kind == "vanilla-cs":
                agg["fallback_rate"] = float(
                    np.mean([r["fallback"] for r in ok])
                )
            if config.kind in ("tube-cs", "tubec-cs"):
                agg["median_chosen_c0"] = float(
                    np.median(_collect(records, name, "chosen_c0"))
                )
        elif config.kind == "cs-fixed":
            ev1 = _collect(records, name, "eval_type1")
            agg["tube_violation_rate"] = float(
                np.mean(ev1 > _collect(records, name, "tube_alpha"))
            )
            agg["empirical_violation_rate"] = float(
                np.mean(ev1 > _collect(records, name, "alpha_tilde"))
            )
            agg["median_eval_type1"] = float(np.median(ev1))
        elif config.kind == "tubec-estimators":
            ev1 = _collect(records, name, "eval_type1")
            for estimator in ("tubec", "empirical", "plugin"):
                agg[f"{estimator}_violation_rate"] = float(
                    np.mean(ev1 > _collect(records, name, estimator))
                )
            agg["eval_type1"] = float(ev1[0])
        elif config.kind == "equivalence":
            agg["total_disagreements"] = int(
                np.sum(_collect(records, name, "disagreements"))
            )
            agg["total_excluded"] = int(np.sum(_collect(records, name, "excluded")))
            np1 = _collect(records, name, "np_eval_type1")
            cs1 = _collect(records, name, "cs_eval_type1")
            np2 = _collect(records, name, "np_eval_type2")
            cs2 = _collect(records, name, "cs_eval_type2")
            agg["eval_violation_rate"] = violation_rate(np1, config.alpha)
            agg["max_type1_gap"] = float(np.max(np.abs(np1 - cs1)))
            agg["max_type2_gap"] = float(np.max(np.abs(np2 - cs2)))
        by_method[name] = agg
    n_errors = sum(1 for r in records if "error" in r)
    return {
        "by_method": by_method,
        "n_records": len(records),
        "n_errors": n_errors,
        "failed_reps": sorted({r["rep"] for r in records if "error" in r}),
    }


def resolve_jobs(jobs=None) -> int:
    if jobs is None:
        env = os.environ.get(JOBS_ENV_VAR, "").strip()
        jobs = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(jobs))


def run_experiment(config: ExperimentConfig, jobs=None) -> ExperimentReport:
    """Run all repetitions (in parallel when jobs > 1) and aggregate.

    Every repetition derives its own seed, so serial and parallel
    schedules produce identical records.
    """
    start = time.perf_counter()
    jobs = resolve_jobs(jobs)
    fixtures = _build_fixtures(config)
    packed = [(config, fixtures, r) for r in range(config.reps)]
    if jobs == 1 or config.reps == 1:
        nested = [_run_rep(p) for p in packed]
    else:
        chunk = max(1, config.reps // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            nested = list(pool.map(_run_rep, packed, chunksize=chunk))
    records = [rec for group in nested for rec in group]
    aggregates = _aggregate(config, records)
    meta = {"elapsed_seconds": time.perf_counter() - start, "jobs": jobs}
    return ExperimentReport(config, records, aggregates, meta)


# ---------------------------------------------------------------------------
# real-data split benchmark (CSV workflow)
# ---------------------------------------------------------------------------


def split_benchmark(
    sample: LabeledSample,
    alpha: float,
    delta: float,
    grid,
    method: str = "lr",
    approach: str = "stratification",
    splits: int = 50,
    seed: int = 0,
    B1: int = 30,
    B: int = 1000,
    stratify_mode: str = "oversample0",
) -> dict:
    """Compare the vanilla and TUBE selectors across random half splits.

    Each split divides the rows into equal-size train and evaluation
    halves; both selectors run on the train half and are scored on the
    evaluation half.
    """
    grid = grid if isinstance(grid, CostGrid) else CostGrid(tuple(grid))
    root = Seed(seed)
    records = []
    for s in range(splits):
        split_seed = root.child(s + 1)
        rng = split_seed.rng()
        perm = rng.permutation(sample.n)
        half = sample.n // 2
        train = sample.subset(np.sort(perm[:half]))
        ev = sample.subset(np.sort(perm[half:]))
        record = {"split": s}
        try:
            van = vanilla_cs(
                train, alpha, grid, approach, method, split_seed.child(0),
                stratify_mode=stratify_mode,
            )
            t1, t2 = _eval_errors(van.classifier, ev)
            record.update(
                vanilla_c0=van.chosen_c0, vanilla_type1=t1, vanilla_type2=t2
            )
        except NpcsError as exc:
            record["vanilla_error"] = str(exc)
        try:
            tcs = tube_cs(
                train, alpha, grid, delta, approach, method, split_seed.child(1),
                B1=B1, B=B, stratify_mode=stratify_mode,
            )
            t1, t2 = _eval_errors(tcs.classifier, ev)
            record.update(tube_c0=tcs.chosen_c0, tube_type1=t1, tube_type2=t2)
        except NpcsError as exc:
            record["tube_error"] = str(exc)
        records.append(record)
    summary = {}
    for tag in ("vanilla", "tube"):
        t1 = np.asarray(
            [r[f"{tag}_type1"] for r in records if f"{tag}_type1" in r]
        )
        if t1.size:
            summary[tag] = {
                "n": int(t1.size),
                "eval_violation_rate": violation_rate(t1, alpha),
                "median_eval_type1": float(np.median(t1)),
            }
        else:
            summary[tag] = {"n": 0}
    return {"records": records, "aggregates": summary}


# ---------------------------------------------------------------------------
# experiment presets
# ---------------------------------------------------------------------------


def preset_configs(name, reps=None, n_eval=None, seed=0, dim=30) -> list:
    """Named experiment bundles; returns a list of ExperimentConfig."""
    gauss = DistributionSpec("gaussian", dim)
    dists = [DistributionSpec(kind, dim) for kind in DISTRIBUTION_KINDS]
    grid = tuple(i / 100.0 for i in range(51, 100, 2))
    if name == "np-control":
        return [
            ExperimentConfig(
                kind="np", dist=gauss, n_train=1000,
                n_eval=n_eval or 100_000, reps=reps or 200,
                alpha=0.1, delta=0.1, methods=("lda", "lr"), seed=seed,
            )
        ]
    if name == "vanilla-control":
        return [
            ExperimentConfig(
                kind="vanilla-cs", dist=gauss, n_train=1000,
                n_eval=n_eval or 100_000, reps=reps or 200,
                alpha=0.1, delta=0.1, methods=("lda", "lr"), grid=grid, seed=seed,
            )
        ]
    if name == "equivalence":
        return [
            ExperimentConfig(
                kind="equivalence", dist=dist, n_train=1000,
                n_eval=n_eval or 100_000, reps=reps or 200,
                alpha=0.05, delta=0.1,
                methods=("lda", "qda", "gnb", "lr"),
                leftout_size=200, seed=seed + i,
            )
            for i, dist in enumerate(dists)
        ]
    if name == "tubec-bound":
        return [
            ExperimentConfig(
                kind="tubec-estimators", dist=dist, n_train=500,
                n_eval=n_eval or 100_000, reps=reps or 100,
                alpha=0.1, delta=0.1, methods=("lr",),
                c0=0.7, m_leftout=m, seed=seed + 10 * i + j,
            )
            for i, dist in enumerate(dists)
            for j, m in enumerate((50, 100, 200))
        ]
    if name == "tube-bound":
        return [
            ExperimentConfig(
                kind="cs-fixed", dist=gauss, n_train=n,
                n_eval=n_eval or 100_000, reps=reps or 100,
                alpha=0.1, delta=0.1, methods=("lr",),
                c0=c0, seed=seed + 10 * i + j,
            )
            for i, c0 in enumerate((0.7, 0.8, 0.9))
            for j, n in enumerate((250, 500, 1000))
        ]
    if name == "selector-tradeoff":
        common = dict(
            dist=gauss, n_train=1000, n_eval=n_eval or 100_000,
            reps=reps or 100, alpha=0.05, delta=0.1, methods=("lr", "gnb"),
        )
        return [
            ExperimentConfig(kind="tube-cs", grid=grid, seed=seed, **common),
            ExperimentConfig(kind="tubec-cs", grid=grid, seed=seed + 1, **common),
            ExperimentConfig(kind="np", seed=seed + 2, **common),
        ]
    raise ValueError(f"unknown preset {name!r}")
