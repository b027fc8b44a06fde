"""Scoring-function training and cost-sensitive classifier construction.

Four base methods are built in: logistic regression with observation
weights (LR), linear and quadratic discriminant analysis (LDA/QDA), and
Gaussian naive Bayes (GNB). Anything else can plug in through
:class:`ExternalScorer`, in which case only post-training thresholding
(and NP thresholding) applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import solve_triangular
from scipy.special import expit

from .core import LabeledSample, Seed, class_priors
from .errors import (
    DegenerateDesignError,
    EmptyClassError,
    EmptyResultError,
    IncompatibleApproachError,
    NonConvergenceError,
    SingularCovarianceError,
)

GENERATIVE_METHODS = ("lda", "qda", "gnb")
METHODS = ("lr",) + GENERATIVE_METHODS

LOG_2PI = float(np.log(2.0 * np.pi))


class CsApproach(str, Enum):
    """The practical cost-sensitive implementation families."""

    STRATIFICATION = "stratification"
    WEIGHTING = "weighting"
    REBALANCING = "rebalancing"
    POST_TRAINING = "post-training"


class StratifyMode(str, Enum):
    OVERSAMPLE0 = "oversample0"
    DOWNSAMPLE1 = "downsample1"


@dataclass(frozen=True)
class CostPair:
    """Normalized misclassification costs; c1 is derived as 1 - c0."""

    c0: float

    def __post_init__(self):
        if not 0.0 < self.c0 < 1.0:
            raise ValueError(f"c0 must lie strictly inside (0, 1), got {self.c0}")

    @property
    def c1(self) -> float:
        return 1.0 - self.c0


class ScoringFunction:
    """A deterministic map from feature vectors to real-valued scores."""

    method: str = "base"
    is_posterior: bool = False

    def score(self, x):
        """Score a (n, d) matrix to a length-n array, or one d-vector to a float."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim == 1:
            return float(self._score_rows(x[None, :])[0])
        return self._score_rows(x)

    def _score_rows(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ThresholdClassifier:
    """A scoring function paired with a threshold; predicts 1 iff score > threshold."""

    scorer: ScoringFunction
    threshold: float

    def scores(self, x):
        return self.scorer.score(x)

    def predict(self, x):
        s = self.scorer.score(x)
        if np.isscalar(s):
            return int(s > self.threshold)
        return (s > self.threshold).astype(np.int64)

    def to_dict(self) -> dict:
        return {"scorer": self.scorer.to_dict(), "threshold": float(self.threshold)}


class LogisticScorer(ScoringFunction):
    """Fitted logistic posterior P(Y=1 | X=x)."""

    method = "lr"
    is_posterior = True

    def __init__(self, intercept, coef, n_train=0, iterations=0, grad_norm=0.0):
        self.intercept = float(intercept)
        self.coef = np.asarray(coef, dtype=np.float64)
        self.n_train = int(n_train)
        self.iterations = int(iterations)
        self.grad_norm = float(grad_norm)

    def _score_rows(self, x):
        return expit(self.intercept + x @ self.coef)

    def to_dict(self):
        return {
            "type": "logistic",
            "intercept": self.intercept,
            "coef": self.coef.tolist(),
        }


class ConstantScorer(ScoringFunction):
    """Degenerate scorer returning the same value everywhere."""

    method = "constant"

    def __init__(self, value: float):
        self.value = float(value)
        self.is_posterior = 0.0 <= self.value <= 1.0

    def _score_rows(self, x):
        return np.full(x.shape[0], self.value)

    def to_dict(self):
        return {"type": "constant", "value": self.value}


class ExternalScorer(ScoringFunction):
    """Adapter for a user-supplied scoring callback."""

    method = "external"

    def __init__(self, fn, is_posterior=False, name="external"):
        self._fn = fn
        self.is_posterior = bool(is_posterior)
        self.name = name

    def _score_rows(self, x):
        return np.asarray(self._fn(x), dtype=np.float64).reshape(x.shape[0])

    def to_dict(self):
        raise NotImplementedError("external scorers are not serializable")


# ---------------------------------------------------------------------------
# logistic regression (weighted IRLS)
# ---------------------------------------------------------------------------

IRLS_MAX_ITER = 100
IRLS_STEP_TOL = 1e-10
IRLS_RIDGE = 1e-8


def _penalized_loglik(beta, eta, y, w):
    # sum w * (y*eta - log(1 + exp(eta))) - ridge/2 * |beta|^2, computed stably;
    # the tiny ridge keeps the optimum finite on separable data
    return float(
        np.sum(w * (y * eta - np.logaddexp(0.0, eta)))
        - 0.5 * IRLS_RIDGE * beta @ beta
    )


def _irls(x, y, w):
    """Newton/IRLS for weighted logistic regression with an intercept.

    Maximizes the weighted log-likelihood with a 1e-8 ridge, which leaves
    regular fits untouched (parameter shift well below 1e-8) but gives
    separable data a finite, deterministic optimum instead of a divergent
    coefficient path.
    """
    n, d = x.shape
    z = np.column_stack([np.ones(n), x])
    beta = np.zeros(d + 1)
    grad_tol = 1e-10 * max(1.0, float(np.sum(w)))
    loglik = _penalized_loglik(beta, z @ beta, y, w)
    grad_norm = np.inf
    for iteration in range(1, IRLS_MAX_ITER + 1):
        eta = z @ beta
        mu = expit(eta)
        grad = z.T @ (w * (y - mu)) - IRLS_RIDGE * beta
        grad_norm = float(np.max(np.abs(grad)))
        if grad_norm < grad_tol:
            return beta, iteration, grad_norm
        wdiag = w * mu * (1.0 - mu)
        hess = z.T @ (wdiag[:, None] * z)
        hess[np.diag_indices_from(hess)] += IRLS_RIDGE
        try:
            step = np.linalg.solve(hess, grad)
        except np.linalg.LinAlgError as exc:
            raise DegenerateDesignError(
                f"design matrix is degenerate beyond the ridge floor: {exc}"
            ) from exc
        if not np.all(np.isfinite(step)):
            raise DegenerateDesignError("non-finite Newton step")
        # backtrack if the full step overshoots
        scale = 1.0
        for _ in range(30):
            candidate = beta + scale * step
            cand_ll = _penalized_loglik(candidate, z @ candidate, y, w)
            if cand_ll >= loglik - 1e-12 * (1.0 + abs(loglik)):
                break
            scale *= 0.5
        else:
            # no improving point along the Newton direction: numerically stationary
            return beta, iteration, grad_norm
        beta = candidate
        loglik = max(loglik, cand_ll)
        if np.max(np.abs(scale * step)) < IRLS_STEP_TOL:
            return beta, iteration, grad_norm
    raise NonConvergenceError(
        f"IRLS did not converge in {IRLS_MAX_ITER} iterations "
        f"(final max-gradient {grad_norm:.3e})",
        grad_norm=grad_norm,
    )


def _fit_logistic_weighted(x, y, w) -> LogisticScorer:
    if not np.all(np.isfinite(x)):
        raise ValueError("features must be finite")
    beta, iterations, grad_norm = _irls(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
        np.asarray(w, dtype=np.float64),
    )
    return LogisticScorer(
        beta[0], beta[1:], n_train=x.shape[0], iterations=iterations, grad_norm=grad_norm
    )


def train_logistic(
    sample: LabeledSample, weight0: float, weight1: float
) -> LogisticScorer:
    """Weighted maximum-likelihood logistic regression.

    Class-0 rows get weight0 and class-1 rows weight1; with integer
    weights this matches replicating rows the same number of times.
    """
    if weight0 <= 0 or weight1 <= 0:
        raise ValueError("class weights must be positive")
    if sample.n0 == 0 or sample.n1 == 0:
        raise EmptyClassError("logistic training needs both classes present")
    w = np.where(sample.labels == 0, float(weight0), float(weight1))
    return _fit_logistic_weighted(sample.features, sample.labels, w)


# ---------------------------------------------------------------------------
# generative models (LDA / QDA / Gaussian naive Bayes)
# ---------------------------------------------------------------------------

COV_REG_SCALE = 1e-6


def _regularize(cov: np.ndarray) -> np.ndarray:
    d = cov.shape[0]
    lam = COV_REG_SCALE * float(np.trace(cov)) / d
    return cov + lam * np.eye(d)


def _chol_or_raise(cov: np.ndarray, what: str) -> np.ndarray:
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError as exc:
        raise SingularCovarianceError(
            f"{what} covariance stayed singular after regularization"
        ) from exc


class GenerativeModel:
    """Per-class Gaussian density estimates with training priors.

    kind "lda" shares one covariance, "qda" keeps one per class, "gnb"
    keeps per-class diagonal variances.
    """

    def __init__(self, kind, mu0, mu1, pi0, pi1, cov0=None, cov1=None,
                 var0=None, var1=None, n_train=0):
        self.kind = kind
        self.mu0 = np.asarray(mu0, dtype=np.float64)
        self.mu1 = np.asarray(mu1, dtype=np.float64)
        self.pi0 = float(pi0)
        self.pi1 = float(pi1)
        self.cov0 = None if cov0 is None else np.asarray(cov0, dtype=np.float64)
        self.cov1 = None if cov1 is None else np.asarray(cov1, dtype=np.float64)
        self.var0 = None if var0 is None else np.asarray(var0, dtype=np.float64)
        self.var1 = None if var1 is None else np.asarray(var1, dtype=np.float64)
        self.n_train = int(n_train)
        self._prepare()

    def _prepare(self):
        d = self.mu0.shape[0]
        if self.kind in ("lda", "qda"):
            self._chol = []
            self._logdet = []
            for cls, cov in ((0, self.cov0), (1, self.cov1)):
                L = _chol_or_raise(cov, f"class-{cls}")
                self._chol.append(L)
                self._logdet.append(2.0 * float(np.sum(np.log(np.diag(L)))))
        elif self.kind == "gnb":
            if np.any(self.var0 <= 0) or np.any(self.var1 <= 0):
                raise SingularCovarianceError(
                    "naive Bayes variance stayed zero after regularization"
                )
            self._logdet = [
                float(np.sum(np.log(self.var0))),
                float(np.sum(np.log(self.var1))),
            ]
        else:
            raise ValueError(f"unknown generative kind {self.kind!r}")
        self._d = d

    def log_density(self, x, cls: int) -> np.ndarray:
        """Log of the fitted class-conditional density at each row of x."""
        x = np.asarray(x, dtype=np.float64)
        mu = self.mu0 if cls == 0 else self.mu1
        centered = x - mu
        if self.kind in ("lda", "qda"):
            L = self._chol[cls]
            sol = solve_triangular(L, centered.T, lower=True)
            quad = np.sum(sol * sol, axis=0)
            logdet = self._logdet[cls]
        else:
            var = self.var0 if cls == 0 else self.var1
            quad = np.sum(centered * centered / var, axis=1)
            logdet = self._logdet[cls]
        return -0.5 * (self._d * LOG_2PI + logdet + quad)

    def log_ratio(self, x) -> np.ndarray:
        """log f1(x) - log f0(x) for each row of x."""
        return self.log_density(x, 1) - self.log_density(x, 0)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "mu0": self.mu0.tolist(),
            "mu1": self.mu1.tolist(),
            "pi0": self.pi0,
            "pi1": self.pi1,
            "n_train": self.n_train,
        }
        if self.kind in ("lda", "qda"):
            out["cov0"] = self.cov0.tolist()
            out["cov1"] = self.cov1.tolist()
        else:
            out["var0"] = self.var0.tolist()
            out["var1"] = self.var1.tolist()
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "GenerativeModel":
        return cls(
            d["kind"], d["mu0"], d["mu1"], d["pi0"], d["pi1"],
            cov0=d.get("cov0"), cov1=d.get("cov1"),
            var0=d.get("var0"), var1=d.get("var1"),
            n_train=d.get("n_train", 0),
        )


def train_generative(sample: LabeledSample, method: str) -> GenerativeModel:
    """Gaussian MLE per class with a small trace-scaled ridge on covariances."""
    method = method.lower()
    if method not in GENERATIVE_METHODS:
        raise ValueError(f"method must be one of {GENERATIVE_METHODS}, got {method!r}")
    if sample.n0 == 0 or sample.n1 == 0:
        raise EmptyClassError("generative training needs both classes present")
    x0 = sample.class_rows(0)
    x1 = sample.class_rows(1)
    mu0 = x0.mean(axis=0)
    mu1 = x1.mean(axis=0)
    pi0, pi1 = class_priors(sample)
    n = sample.n
    if method == "gnb":
        var0 = x0.var(axis=0)
        var1 = x1.var(axis=0)
        var0 = var0 + COV_REG_SCALE * float(var0.mean())
        var1 = var1 + COV_REG_SCALE * float(var1.mean())
        return GenerativeModel("gnb", mu0, mu1, pi0, pi1, var0=var0, var1=var1,
                               n_train=n)
    c0 = (x0 - mu0).T @ (x0 - mu0) / x0.shape[0]
    c1 = (x1 - mu1).T @ (x1 - mu1) / x1.shape[0]
    if method == "lda":
        pooled = _regularize((c0 * x0.shape[0] + c1 * x1.shape[0]) / n)
        return GenerativeModel("lda", mu0, mu1, pi0, pi1, cov0=pooled, cov1=pooled,
                               n_train=n)
    return GenerativeModel("qda", mu0, mu1, pi0, pi1,
                           cov0=_regularize(c0), cov1=_regularize(c1), n_train=n)


class PosteriorScorer(ScoringFunction):
    """Posterior probability of class 1 from a generative model and priors.

    With the model's training priors this is the usual plug-in posterior;
    replacing them with normalized costs gives the rebalanced score.
    Boundary priors (0 or 1) are allowed and resolve through log space.
    """

    method = "posterior"
    is_posterior = True

    def __init__(self, model: GenerativeModel, prior0: float, prior1: float):
        if not np.isclose(prior0 + prior1, 1.0) or prior0 < 0 or prior1 < 0:
            raise ValueError("priors must be non-negative and sum to one")
        self.model = model
        self.prior0 = float(prior0)
        self.prior1 = float(prior1)
        self.n_train = model.n_train

    @property
    def prior_shift(self) -> float:
        with np.errstate(divide="ignore"):
            return float(np.log(self.prior1) - np.log(self.prior0))

    def _score_rows(self, x):
        s = expit(self.model.log_ratio(x) + self.prior_shift)
        # exact double-zero densities (log ratio = nan) resolve to prior1
        if np.isnan(s).any():
            s = np.where(np.isnan(s), self.prior1, s)
        return s

    def to_dict(self):
        return {
            "type": "posterior",
            "model": self.model.to_dict(),
            "prior0": self.prior0,
            "prior1": self.prior1,
        }


def posterior_score(model: GenerativeModel, priors=None) -> PosteriorScorer:
    """Scoring function f1*p1 / (f0*p0 + f1*p1), computed in log space."""
    if priors is None:
        priors = (model.pi0, model.pi1)
    return PosteriorScorer(model, priors[0], priors[1])


def scorer_from_dict(d: dict) -> ScoringFunction:
    t = d["type"]
    if t == "logistic":
        return LogisticScorer(d["intercept"], d["coef"])
    if t == "posterior":
        return PosteriorScorer(
            GenerativeModel.from_dict(d["model"]), d["prior0"], d["prior1"]
        )
    if t == "constant":
        return ConstantScorer(d["value"])
    raise ValueError(f"unknown scorer type {t!r}")


def classifier_from_dict(d: dict) -> ThresholdClassifier:
    return ThresholdClassifier(scorer_from_dict(d["scorer"]), d["threshold"])


# ---------------------------------------------------------------------------
# stratification
# ---------------------------------------------------------------------------


def _stratify_draw(n0, n1, costs: CostPair, mode: StratifyMode, rng):
    """Index plan for stratified resampling; None means 'keep class as is'."""
    ratio = costs.c0 / costs.c1
    if mode == StratifyMode.OVERSAMPLE0:
        target0 = int(np.ceil(n0 * ratio))
        if target0 == n0:
            return None, None
        return rng.choice(n0, size=target0, replace=True), None
    target1 = int(np.floor(n1 / ratio))
    if target1 == 0:
        raise EmptyResultError(
            f"downsampling class 1 to ratio {ratio:.3g} leaves zero rows"
        )
    if target1 == n1:
        return None, None
    picked = rng.choice(n1, size=target1, replace=False)
    return None, np.sort(picked)


def stratify(
    sample: LabeledSample,
    costs: CostPair,
    mode: StratifyMode = StratifyMode.OVERSAMPLE0,
    seed: Seed | None = None,
) -> LabeledSample:
    """Resample so the class-count ratio tracks c0:c1.

    Oversample0 redraws class 0 with replacement to ceil(n0*c0/c1);
    Downsample1 subsamples class 1 without replacement to floor(n1*c1/c0).
    Neutral costs return the input unchanged.
    """
    if sample.n0 == 0 or sample.n1 == 0:
        raise EmptyClassError("stratification needs both classes present")
    if seed is None:
        seed = Seed(0)
    mode = StratifyMode(mode)
    idx0, idx1 = _stratify_draw(sample.n0, sample.n1, costs, mode, seed.rng())
    if idx0 is None and idx1 is None:
        return sample
    x0 = sample.class_rows(0)
    x1 = sample.class_rows(1)
    if idx0 is not None:
        x0 = x0[idx0]
    if idx1 is not None:
        x1 = x1[idx1]
    features = np.vstack([x0, x1])
    labels = np.concatenate(
        [np.zeros(x0.shape[0], dtype=np.int64), np.ones(x1.shape[0], dtype=np.int64)]
    )
    return LabeledSample(features, labels)


# ---------------------------------------------------------------------------
# cost-sensitive classifier construction
# ---------------------------------------------------------------------------


def fit_scorer(sample: LabeledSample, method) -> ScoringFunction:
    """Train the requested method with natural priors and unit weights."""
    if isinstance(method, ScoringFunction):
        return method
    method = method.lower()
    if method == "lr":
        return train_logistic(sample, 1.0, 1.0)
    if method in GENERATIVE_METHODS:
        return posterior_score(train_generative(sample, method))
    raise ValueError(f"unknown method {method!r}")


def build_cs_classifier(
    sample: LabeledSample,
    costs: CostPair,
    approach: CsApproach,
    method,
    seed: Seed | None = None,
    stratify_mode: StratifyMode = StratifyMode.OVERSAMPLE0,
) -> ThresholdClassifier:
    """Construct a cost-sensitive classifier under one of the four approaches.

    Stratification and weighting retrain on modified data/weights and
    threshold the fitted posterior at 1/2; rebalancing swaps the training
    priors for (c0, c1) and thresholds at 1/2; post-training keeps the
    natural fit and thresholds at c0.
    """
    approach = CsApproach(approach)
    external = isinstance(method, ScoringFunction)
    name = method if isinstance(method, str) else method.method
    if external and approach != CsApproach.POST_TRAINING:
        raise IncompatibleApproachError(
            f"external scoring functions only support post-training, not {approach.value}"
        )

    if approach == CsApproach.STRATIFICATION:
        if seed is None:
            seed = Seed(0)
        if name == "lr":
            # identical draw to stratify(); duplicates are collapsed into
            # observation weights, which fits the same likelihood
            idx0, idx1 = _stratify_draw(
                sample.n0, sample.n1, costs, StratifyMode(stratify_mode), seed.rng()
            )
            x0 = sample.class_rows(0)
            x1 = sample.class_rows(1)
            w0 = (
                np.ones(x0.shape[0])
                if idx0 is None
                else np.bincount(idx0, minlength=x0.shape[0]).astype(np.float64)
            )
            if idx1 is not None:
                x1 = x1[idx1]
            keep0 = w0 > 0
            x = np.vstack([x0[keep0], x1])
            y = np.concatenate(
                [np.zeros(int(keep0.sum())), np.ones(x1.shape[0])]
            )
            w = np.concatenate([w0[keep0], np.ones(x1.shape[0])])
            scorer = _fit_logistic_weighted(x, y, w)
            scorer.n_train = sample.n
            return ThresholdClassifier(scorer, 0.5)
        resampled = stratify(sample, costs, stratify_mode, seed)
        scorer = fit_scorer(resampled, name)
        # report the original sample size, not the resampled row count
        scorer.n_train = sample.n
        return ThresholdClassifier(scorer, 0.5)

    if approach == CsApproach.WEIGHTING:
        if name != "lr":
            raise IncompatibleApproachError(
                "observation weighting is only implemented for logistic regression"
            )
        return ThresholdClassifier(train_logistic(sample, costs.c0, costs.c1), 0.5)

    if approach == CsApproach.REBALANCING:
        if name not in GENERATIVE_METHODS:
            raise IncompatibleApproachError(
                "rebalancing requires a generative method (lda, qda, gnb)"
            )
        model = train_generative(sample, name)
        return ThresholdClassifier(posterior_score(model, (costs.c0, costs.c1)), 0.5)

    # post-training
    scorer = fit_scorer(sample, method)
    if not scorer.is_posterior:
        raise IncompatibleApproachError(
            "post-training thresholding needs a posterior scorer in [0, 1]"
        )
    return ThresholdClassifier(scorer, costs.c0)
