"""Acceptance suite: one test per release criterion.

Heavy Monte-Carlo fixtures are session-scoped and shared between tests.
Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL
line per criterion plus the measured numbers. Expect a total runtime of
roughly half an hour on one core.
"""

import json
import math
import os
from fractions import Fraction

import numpy as np
import pytest

from npcs import (
    CostPair,
    LabeledSample,
    Seed,
    ThresholdClassifier,
    build_cs_classifier,
    empirical_errors,
    generate,
    min_feasible_m,
    np_order,
    plugin_alpha,
    preset_configs,
    rebalance_cost,
    run_experiment,
    train_logistic,
    violation_bound,
)
from npcs.cli import EXIT_OK, main
from npcs.errors import MinSampleSizeError
from npcs.report import load_document, strip_volatile
from npcs.simgen import DistributionSpec

from conftest import make_sample


def check(criterion, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {criterion}: {status} | {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def binomial_slack(p, n):
    return 2.0 * math.sqrt(p * (1.0 - p) / n)


# ---------------------------------------------------------------------------
# shared Monte-Carlo fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def np_control_report():
    (config,) = preset_configs("np-control", seed=2701)
    return run_experiment(config)


@pytest.fixture(scope="session")
def vanilla_report():
    (config,) = preset_configs("vanilla-control", seed=2702)
    return run_experiment(config)


@pytest.fixture(scope="session")
def equivalence_reports():
    return [run_experiment(c) for c in preset_configs("equivalence", seed=2705)]


@pytest.fixture(scope="session")
def tubec_bound_reports():
    return [run_experiment(c) for c in preset_configs("tubec-bound", seed=2706)]


@pytest.fixture(scope="session")
def tube_bound_reports():
    return [run_experiment(c) for c in preset_configs("tube-bound", seed=2707)]


@pytest.fixture(scope="session")
def tradeoff_reports():
    configs = preset_configs("selector-tradeoff", seed=2708)
    return {c.kind: run_experiment(c) for c in configs}


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def test_criterion_1_exact_binomial_tail():
    """violation_bound matches an exact rational oracle for all m <= 60."""
    worst = 0.0
    for alpha_num, alpha_den in ((1, 100), (1, 20), (1, 10), (1, 4)):
        alpha_exact = Fraction(alpha_num, alpha_den)
        alpha_float = alpha_num / alpha_den
        p = 1 - alpha_exact
        for m in range(1, 61):
            # exact upper tails accumulated from k = m downwards
            tail = Fraction(0)
            exact = [Fraction(0)] * (m + 2)
            for k in range(m, 0, -1):
                tail += math.comb(m, k) * p**k * alpha_exact ** (m - k)
                exact[k] = tail
            got = violation_bound(np.arange(1, m + 1), m, alpha_float)
            err = max(
                abs(float(exact[k]) - got[k - 1]) for k in range(1, m + 1)
            )
            worst = max(worst, err)
    check(1, worst <= 1e-12, f"max |betainc - exact rational| = {worst:.3e}")


def test_criterion_2_minimum_sample_size():
    """np_order errors exactly when (1-alpha)^m > delta; boundary at 22."""
    ok = np_order(22, 0.1, 0.1) == 22
    try:
        np_order(21, 0.1, 0.1)
        ok = False
        required = None
    except MinSampleSizeError as err:
        required = err.required_m
        ok = ok and required == 22
    # exact-rational feasibility scan across a range of m
    for m in range(1, 61):
        feasible = Fraction(9, 10) ** m <= Fraction(1, 10)
        try:
            np_order(m, 0.1, 0.1)
            ok = ok and feasible
        except MinSampleSizeError:
            ok = ok and not feasible
    ok = ok and min_feasible_m(0.1, 0.1) == 22
    check(2, ok, f"boundary m=22 (0.9^22={0.9**22:.4f}), infeasible m=21 reports {required}")


def test_criterion_3_np_guarantee(np_control_report):
    """NP umbrella keeps the eval-proxy violation rate within delta + noise."""
    agg = np_control_report.aggregates["by_method"]
    bound = 0.1 + binomial_slack(0.1, 200)
    rates = {m: agg[m]["eval_violation_rate"] for m in ("lda", "lr")}
    ok = all(r <= bound for r in rates.values())
    ok = ok and np_control_report.aggregates["n_errors"] == 0
    check(3, ok, f"violation rates {rates} <= {bound:.4f} over 200 reps")


def test_criterion_4_vanilla_failure(np_control_report, vanilla_report):
    """Empirical cost selection exceeds 2*delta and the NP rates."""
    van = vanilla_report.aggregates["by_method"]
    npa = np_control_report.aggregates["by_method"]
    details = []
    ok = vanilla_report.aggregates["n_errors"] == 0
    for m in ("lda", "lr"):
        rate = van[m]["eval_violation_rate"]
        np_rate = npa[m]["eval_violation_rate"]
        details.append(f"{m}: vanilla {rate:.3f} vs np {np_rate:.3f}")
        ok = ok and rate > 2 * 0.1 and rate > np_rate
    check(4, ok, "; ".join(details))


def test_criterion_5_correspondence_exactness(equivalence_reports):
    """Mapped CS classifiers agree with NP classifiers on every eval point."""
    total_disagreements = 0
    total_excluded = 0
    total_errors = 0
    reps = 0
    for report in equivalence_reports:
        total_errors += report.aggregates["n_errors"]
        for agg in report.aggregates["by_method"].values():
            total_disagreements += agg["total_disagreements"]
            total_excluded += agg["total_excluded"]
            reps += agg["n"]
    ok = total_disagreements == 0 and total_errors == 0 and reps == 3 * 4 * 200
    check(
        5,
        ok,
        f"{reps} rep-method pairs, {total_disagreements} disagreements, "
        f"{total_excluded} boundary-band points excluded, {total_errors} errors",
    )


def test_criterion_6_tubec_calibration(tubec_bound_reports):
    """TUBEc violation frequency in [0.02, 0.20] per cell, below the baselines."""
    lines = []
    ok = True
    for report in tubec_bound_reports:
        cfg = report.config
        agg = report.aggregates["by_method"]["lr"]
        t, e, p = (
            agg["tubec_violation_rate"],
            agg["empirical_violation_rate"],
            agg["plugin_violation_rate"],
        )
        cell_ok = 0.02 <= t <= 0.20 and e > t and p > t
        ok = ok and cell_ok
        lines.append(
            f"{cfg.dist.kind}/m={cfg.m_leftout}: tubec={t:.3f} emp={e:.3f} "
            f"plugin={p:.3f}{'' if cell_ok else ' <-- out of window'}"
        )
    check(6, ok, " | ".join(lines))


def test_criterion_7_tube_calibration(tube_bound_reports):
    """TUBE violation frequency under 1.5*delta everywhere, under delta at n=1000."""
    lines = []
    ok = True
    loose = 0.15 + binomial_slack(0.15, 100)
    tight = 0.10 + binomial_slack(0.10, 100)
    for report in tube_bound_reports:
        cfg = report.config
        rate = report.aggregates["by_method"]["lr"]["tube_violation_rate"]
        bound = tight if cfg.n_train == 1000 else loose
        cell_ok = rate <= bound
        ok = ok and cell_ok
        lines.append(
            f"n={cfg.n_train}/c0={cfg.c0}: {rate:.3f}<={bound:.3f}"
            f"{'' if cell_ok else ' <-- exceeded'}"
        )
    check(7, ok, " | ".join(lines))


def test_criterion_8_tube_cs_vs_np(tradeoff_reports):
    """TUBE-CS controls type I at 2*delta and trades type II no worse than NP."""
    tube_aggs = tradeoff_reports["tube-cs"].aggregates["by_method"]
    np_aggs = tradeoff_reports["np"].aggregates["by_method"]
    lines = []
    ok = True
    for m in ("lr", "gnb"):
        viol = tube_aggs[m]["eval_violation_rate"]
        t2_tube = tube_aggs[m]["median_eval_type2"]
        t2_np = np_aggs[m]["median_eval_type2"]
        m_ok = viol <= 0.2 and t2_tube <= t2_np
        ok = ok and m_ok
        lines.append(
            f"{m}: violation={viol:.3f}, median type2 {t2_tube:.3f} vs np {t2_np:.3f}"
            f"{'' if m_ok else ' <-- type II worse than NP'}"
        )
    check(8, ok, " | ".join(lines))


def test_supplementary_tubec_cs_conservatism(tradeoff_reports):
    # the single-split selector should be at least as conservative as the
    # full-sample one (not a numbered criterion, but part of the trade story)
    tube_aggs = tradeoff_reports["tube-cs"].aggregates["by_method"]
    tubec_aggs = tradeoff_reports["tubec-cs"].aggregates["by_method"]
    for m in ("lr", "gnb"):
        assert (
            tubec_aggs[m]["eval_violation_rate"]
            <= tube_aggs[m]["eval_violation_rate"] + 0.05
        )


def test_criterion_9_property_suite():
    """Fast closed-form identities and monotonicity checks."""
    ok = True
    notes = []

    # plugin identity at F = 1
    worst = max(
        abs(plugin_alpha(1.0, m, d) - (1 - d ** (1 / m)))
        for m in (1, 2, 10, 100, 400)
        for d in (0.05, 0.1, 0.3)
    )
    ok &= worst <= 1e-12
    notes.append(f"plugin identity err {worst:.1e}")

    # rebalance identity at pi0 = 0.5
    worst = max(abs(rebalance_cost(t, 0.5) - t) for t in np.linspace(0, 1, 41))
    ok &= worst <= 1e-12
    notes.append(f"rebalance identity err {worst:.1e}")

    # monotonicity of the binomial tail in k
    v = violation_bound(np.arange(1, 201), 200, 0.05)
    ok &= bool(np.all(np.diff(v) <= 1e-15))
    # monotonicity of plugin_alpha in F
    vals = plugin_alpha(np.linspace(0, 1, 101), 60, 0.1)
    ok &= bool(np.all(np.diff(vals) <= 1e-12))
    notes.append("tail and plugin monotone")

    # post-training predictions monotone in the cost
    sample = make_sample(np.random.default_rng(14), 150, 150, d=3)
    pts = np.random.default_rng(15).standard_normal((400, 3))
    prev = None
    monotone = True
    for c0 in np.linspace(0.1, 0.9, 9):
        pred = build_cs_classifier(sample, CostPair(c0), "post-training", "lr").predict(pts)
        if prev is not None:
            monotone &= bool(np.all(prev >= pred))
        prev = pred
    ok &= monotone
    notes.append("post-training monotone in c0")

    # integer-weight vs replication equivalence at 1e-8
    w = 4
    weighted = train_logistic(sample, float(w), 1.0)
    x0, x1 = sample.class_rows(0), sample.class_rows(1)
    replicated = LabeledSample(
        np.vstack([np.tile(x0, (w, 1)), x1]),
        np.concatenate([
            np.zeros(w * x0.shape[0], dtype=int), np.ones(x1.shape[0], dtype=int)
        ]),
    )
    plain = train_logistic(replicated, 1.0, 1.0)
    gap = max(
        abs(weighted.intercept - plain.intercept),
        float(np.max(np.abs(weighted.coef - plain.coef))),
    )
    ok &= gap <= 1e-8
    notes.append(f"weight/replication gap {gap:.1e}")

    # permutation invariance of the error report
    clf = ThresholdClassifier(weighted, 0.5)
    base = empirical_errors(clf, sample)
    perm = sample.subset(np.random.default_rng(16).permutation(sample.n))
    other = empirical_errors(clf, perm)
    ok &= (base.type1, base.type2) == (other.type1, other.type2)
    notes.append("permutation invariant")

    check(9, bool(ok), "; ".join(notes))


def test_criterion_10_cli_determinism(tmp_path, monkeypatch):
    """Every subcommand replays byte-identically, serial or parallel."""
    # small CSV shared by the data-driven commands
    sample = generate(DistributionSpec("gaussian", 3), 240, Seed(4242))
    csv_path = tmp_path / "data.csv"
    lines = ["f0,f1,f2,label"]
    for x, y in zip(sample.features, sample.labels):
        lines.append(
            f"{float(x[0])!r},{float(x[1])!r},{float(x[2])!r},"
            f"{'pos' if y == 0 else 'neg'}"
        )
    csv_path.write_text("\n".join(lines) + "\n")
    data_flags = [
        "--data", str(csv_path), "--label-column", "label",
        "--class0-value", "pos",
    ]

    commands = {
        "np-train": data_flags + ["--method", "lda", "--alpha", "0.2",
                                  "--delta", "0.2", "--seed", "3"],
        "vanilla-cs": data_flags + ["--alpha", "0.3", "--c0-grid", "0.6:0.2:0.8",
                                    "--seed", "3"],
        "tubec": data_flags + ["--c0", "0.7", "--delta", "0.2",
                               "--bootstrap", "60", "--seed", "3"],
        "tube": data_flags + ["--c0", "0.7", "--delta", "0.2", "--bootstrap",
                              "40", "--splits", "3", "--seed", "3"],
        "tube-cs": data_flags + ["--alpha", "0.9", "--delta", "0.2",
                                 "--c0-grid", "0.6:0.2:0.8", "--bootstrap", "40",
                                 "--splits", "3", "--seed", "3"],
        "tubec-cs": data_flags + ["--alpha", "0.9", "--delta", "0.2",
                                  "--c0-grid", "0.6:0.2:0.8", "--bootstrap", "40",
                                  "--seed", "3"],
        "correspond": data_flags + ["--method", "lda", "--alpha", "0.2",
                                    "--delta", "0.3", "--seed", "3"],
        "simulate": ["--algorithm", "np", "--dist", "gaussian", "--dim", "3",
                     "--train", "60", "--eval", "600", "--reps", "6",
                     "--alpha", "0.2", "--delta", "0.2", "--methods", "lda",
                     "--seed", "3"],
    }

    def run(cmd, args, tag):
        out = tmp_path / f"{cmd}-{tag}.json"
        code = main([cmd, *args, "--out", str(out)])
        assert code == EXIT_OK, f"{cmd} exited {code}"
        return out

    def stripped_bytes(path):
        return json.dumps(strip_volatile(load_document(path)), sort_keys=True)

    failures = []
    model_report = None
    for cmd, args in commands.items():
        first = run(cmd, args, "a")
        second = run(cmd, args, "b")
        if stripped_bytes(first) != stripped_bytes(second):
            failures.append(f"{cmd}: rerun differs")
        if main(["replay", str(first), "--out",
                 str(tmp_path / f"{cmd}-r.json"), "--check"]) != EXIT_OK:
            failures.append(f"{cmd}: replay differs")
        if cmd == "tubec":
            model_report = first

    # evaluate: reuses the tubec classifier on the CSV
    eval_args = data_flags + ["--model", str(model_report)]
    first = run("evaluate", eval_args, "a")
    second = run("evaluate", eval_args, "b")
    if stripped_bytes(first) != stripped_bytes(second):
        failures.append("evaluate: rerun differs")
    if main(["replay", str(first), "--out", str(tmp_path / "eval-r.json"),
             "--check"]) != EXIT_OK:
        failures.append("evaluate: replay differs")

    # serial vs parallel execution of the harness
    monkeypatch.setenv("NPCS_JOBS", "1")
    serial = run("simulate", commands["simulate"], "serial")
    monkeypatch.setenv("NPCS_JOBS", "4")
    parallel = run("simulate", commands["simulate"], "parallel")
    if stripped_bytes(serial) != stripped_bytes(parallel):
        failures.append("simulate: serial vs parallel differs")

    check(10, not failures, "; ".join(failures) if failures else
          f"{len(commands) + 1} subcommands replay byte-identically, serial == parallel")
