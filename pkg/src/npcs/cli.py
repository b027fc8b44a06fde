"""Command-line entry point.

Every subcommand resolves its configuration from built-in defaults, an
optional JSON config file (--config), and command-line flags (flags win),
embeds the fully resolved configuration in its report, and writes the
report as JSON to --out (stdout when omitted).

Exit codes:
    0  success
    1  internal or unexpected domain error
    2  input could not be parsed (CSV or arguments)
    3  left-out class-0 sample too small for the (alpha, delta) target
    4  no candidate cost met the target type I error bound
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from . import __version__
from .classifiers import (
    CostPair,
    GENERATIVE_METHODS,
    build_cs_classifier,
    classifier_from_dict,
    fit_scorer,
    posterior_score,
    train_generative,
)
from .core import LabeledSample, Seed, empirical_errors, split_class0
from .correspondence import np_to_cs
from .errors import (
    MinSampleSizeError,
    NoFeasibleCostError,
    NonNumericFeatureError,
    NpcsError,
    ParseError,
    UnknownLabelValueError,
)
from .report import build_document, documents_equal, dump_document, load_document
from .selectors import CostGrid, tube_cs, tubec_cs, vanilla_cs
from .simgen import (
    DistributionSpec,
    ExperimentConfig,
    generate,
    preset_configs,
    run_experiment,
    split_benchmark,
)
from .tube import tube, tubec
from .umbrella import NpSettings, np_classifier

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_MIN_SAMPLE = 3
EXIT_NO_FEASIBLE = 4

DEFAULT_GRID_SPEC = "0.51:0.02:0.99"

PRESETS = (
    "np-control",
    "vanilla-control",
    "equivalence",
    "tubec-bound",
    "tube-bound",
    "selector-tradeoff",
    "csv-splits",
)


# ---------------------------------------------------------------------------
# CSV ingestion
# ---------------------------------------------------------------------------


def ingest_csv(path, label_column, class0_value) -> LabeledSample:
    """Load a headered CSV into a LabeledSample.

    Rows whose label cell equals class0_value become class 0 (the severe
    state); every other row becomes class 1. All non-label columns must
    parse as reals.
    """
    if label_column is None:
        raise UnknownLabelValueError("a label column name is required")
    if class0_value is None:
        raise UnknownLabelValueError("the class-0 label value is required")
    try:
        fh = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise ParseError(f"cannot open {path}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path} is empty") from None
        header = [h.strip() for h in header]
        if label_column not in header:
            raise UnknownLabelValueError(
                f"label column {label_column!r} not in header {header}"
            )
        label_idx = header.index(label_column)
        feature_names = [h for i, h in enumerate(header) if i != label_idx]
        rows = []
        labels = []
        seen = set()
        for rownum, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"row {rownum} has {len(row)} cells, expected {len(header)}",
                    row=rownum,
                )
            raw_label = row[label_idx].strip()
            seen.add(raw_label)
            labels.append(0 if raw_label == str(class0_value) else 1)
            values = []
            for i, cell in enumerate(row):
                if i == label_idx:
                    continue
                try:
                    values.append(float(cell))
                except ValueError:
                    name = header[i]
                    raise NonNumericFeatureError(
                        f"row {rownum}, column {name!r}: cannot parse {cell!r} "
                        "as a real number",
                        row=rownum,
                        column=name,
                    ) from None
            rows.append(values)
        if not rows:
            raise ParseError(f"{path} has a header but no data rows")
    labels = np.asarray(labels, dtype=np.int64)
    if not np.any(labels == 0):
        raise UnknownLabelValueError(
            f"class-0 value {class0_value!r} never occurs; observed labels: "
            f"{sorted(seen)}"
        )
    return LabeledSample(np.asarray(rows, dtype=np.float64), labels)


def _check_expectation(sample: LabeledSample, expect: str):
    """Warn (never fail) when the dataset shape differs from the expected one."""
    try:
        n_exp, d_exp, frac_exp = expect.split(",")
        n_exp, d_exp, frac_exp = int(n_exp), int(d_exp), float(frac_exp)
    except ValueError:
        raise ParseError(f"--expect must look like 'n,d,frac', got {expect!r}") from None
    frac = sample.n0 / sample.n
    if sample.n != n_exp or sample.d != d_exp or abs(frac - frac_exp) > 0.005:
        print(
            f"warning: dataset shape (n={sample.n}, d={sample.d}, "
            f"n0/n={frac:.2f}) differs from expected (n={n_exp}, d={d_exp}, "
            f"n0/n={frac_exp:.2f}); results may not be comparable",
            file=sys.stderr,
        )


# ---------------------------------------------------------------------------
# configuration resolution
# ---------------------------------------------------------------------------

_DATA_DEFAULTS = {
    "data": None,
    "label_column": None,
    "class0_value": None,
    "expect": None,
    "dist": "gaussian",
    "dim": 30,
    "train": 1000,
    "seed": 0,
}

COMMAND_DEFAULTS = {
    "np-train": {
        **_DATA_DEFAULTS,
        "method": "lda",
        "alpha": 0.05,
        "delta": 0.1,
        "leftout_size": None,
        "leftout_fraction": 0.5,
    },
    "vanilla-cs": {
        **_DATA_DEFAULTS,
        "method": "lr",
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "alpha": 0.05,
        "grid": None,
    },
    "tubec": {
        **_DATA_DEFAULTS,
        "method": "lr",
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "c0": None,
        "delta": 0.1,
        "bootstrap": 1000,
        "leftout_size": None,
        "leftout_fraction": 0.5,
    },
    "tube": {
        **_DATA_DEFAULTS,
        "method": "lr",
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "c0": None,
        "delta": 0.1,
        "bootstrap": 1000,
        "splits": 30,
        "leftout_fraction": 0.5,
    },
    "tube-cs": {
        **_DATA_DEFAULTS,
        "method": "lr",
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "alpha": 0.05,
        "delta": 0.1,
        "grid": None,
        "bootstrap": 1000,
        "splits": 30,
        "leftout_fraction": 0.5,
    },
    "tubec-cs": {
        **_DATA_DEFAULTS,
        "method": "lr",
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "alpha": 0.05,
        "delta": 0.1,
        "grid": None,
        "bootstrap": 1000,
        "leftout_fraction": 0.5,
    },
    "correspond": {
        **_DATA_DEFAULTS,
        "method": "lda",
        "approach": None,
        "alpha": 0.05,
        "delta": 0.1,
        "leftout_size": None,
        "leftout_fraction": 0.5,
    },
    "simulate": {
        **_DATA_DEFAULTS,
        "preset": None,
        "algorithm": None,
        "methods": ["lr"],
        "approach": "stratification",
        "stratify_mode": "oversample0",
        "alpha": 0.05,
        "delta": 0.1,
        # None lets presets keep their canonical repetition counts
        "reps": None,
        "eval": None,
        "grid": None,
        "c0": None,
        "m_leftout": None,
        "leftout_size": None,
        "leftout_fraction": 0.5,
        "bootstrap": 1000,
        "splits": 30,
    },
    "evaluate": {
        **_DATA_DEFAULTS,
        "model": None,
    },
}


def parse_grid_spec(spec: str):
    """Resolve 'start:step:end' (inclusive end, within float wiggle)."""
    try:
        start, step, end = (float(part) for part in spec.split(":"))
    except ValueError:
        raise ParseError(
            f"grid must look like 'start:step:end', got {spec!r}"
        ) from None
    if step <= 0 or end < start:
        raise ParseError(f"grid spec {spec!r} is not increasing")
    count = int(np.floor((end - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def _resolve_config(command, args, file_config):
    defaults = COMMAND_DEFAULTS[command]
    config = dict(defaults)
    if file_config:
        unknown = set(file_config) - set(defaults)
        if unknown:
            raise ParseError(
                f"config file has unknown keys for {command}: {sorted(unknown)}"
            )
        config.update(file_config)
    for dest in defaults:
        value = getattr(args, dest, None)
        if value is not None:
            config[dest] = value
    if getattr(args, "c0_grid", None) is not None:
        config["grid"] = parse_grid_spec(args.c0_grid)
    if "grid" in defaults and config.get("grid") is None:
        config["grid"] = parse_grid_spec(DEFAULT_GRID_SPEC)
    if isinstance(config.get("methods"), str):
        config["methods"] = [m.strip() for m in config["methods"].split(",")]
    return config


# ---------------------------------------------------------------------------
# execution (shared by fresh runs and replays)
# ---------------------------------------------------------------------------


def _load_sample(config, seed: Seed) -> LabeledSample:
    if config.get("data"):
        sample = ingest_csv(
            config["data"], config.get("label_column"), config.get("class0_value")
        )
        if config.get("expect"):
            _check_expectation(sample, config["expect"])
        return sample
    spec = DistributionSpec(config["dist"], config["dim"])
    return generate(spec, config["train"], seed)


def _leftout_size(config, n0):
    if config.get("leftout_size") is not None:
        return config["leftout_size"]
    fraction = config.get("leftout_fraction", 0.5)
    return max(1, min(n0 - 1, int(round(n0 * fraction))))


def _exec_np_train(config):
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    mixed, leftout = split_class0(sample, _leftout_size(config, sample.n0), root.child(1))
    scorer = fit_scorer(mixed, config["method"])
    result = np_classifier(scorer, leftout, NpSettings(config["alpha"], config["delta"]))
    emp = float(np.mean(np.asarray(scorer.score(leftout.features)) > result.threshold))
    return {
        "k_star": result.k_star,
        "threshold": result.threshold,
        "bound": result.bound,
        "m": result.m,
        "emp_type1": emp,
        "classifier": result.classifier.to_dict(),
    }


def _exec_vanilla_cs(config):
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    sel = vanilla_cs(
        sample, config["alpha"], CostGrid(tuple(config["grid"])),
        config["approach"], config["method"], root.child(1),
        stratify_mode=config["stratify_mode"],
    )
    return {
        "chosen_c0": sel.chosen_c0,
        "fallback": sel.fallback,
        "estimates": list(sel.estimates),
        "grid": list(config["grid"]),
        "classifier": sel.classifier.to_dict(),
    }


def _exec_tubec(config):
    if config.get("c0") is None:
        raise ParseError("tubec needs a fixed type I error cost (--c0)")
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    mixed, leftout = split_class0(sample, _leftout_size(config, sample.n0), root.child(1))
    clf = build_cs_classifier(
        mixed, CostPair(config["c0"]), config["approach"], config["method"],
        root.child(2), stratify_mode=config["stratify_mode"],
    )
    estimate = tubec(clf, leftout, config["delta"], config["bootstrap"], root.child(3))
    alpha_b = estimate.diagnostics["alpha_b"]
    return {
        "estimate": estimate.value,
        "c0": config["c0"],
        "m": int(leftout.n),
        "B": config["bootstrap"],
        "delta": config["delta"],
        "alpha_b_summary": {
            "min": float(np.min(alpha_b)),
            "median": float(np.median(alpha_b)),
            "max": float(np.max(alpha_b)),
        },
        "classifier": clf.to_dict(),
    }


def _exec_tube(config):
    if config.get("c0") is None:
        raise ParseError("tube needs a fixed type I error cost (--c0)")
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    estimate, clf = tube(
        sample, CostPair(config["c0"]), config["approach"], config["method"],
        config["delta"], B1=config["splits"], B=config["bootstrap"],
        leftout_fraction=config["leftout_fraction"], seed=root.child(1),
        stratify_mode=config["stratify_mode"],
    )
    return {
        "estimate": estimate.value,
        "alpha_tilde": float(estimate.diagnostics["alpha_tilde"]),
        "c0": config["c0"],
        "B": config["bootstrap"],
        "B1": config["splits"],
        "delta": config["delta"],
        "classifier": clf.to_dict(),
    }


def _exec_selector(config, which):
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    grid = CostGrid(tuple(config["grid"]))
    if which == "tube-cs":
        sel = tube_cs(
            sample, config["alpha"], grid, config["delta"], config["approach"],
            config["method"], root.child(1), B1=config["splits"],
            B=config["bootstrap"], leftout_fraction=config["leftout_fraction"],
            stratify_mode=config["stratify_mode"],
        )
    else:
        sel = tubec_cs(
            sample, config["alpha"], grid, config["delta"], config["approach"],
            config["method"], root.child(1), B=config["bootstrap"],
            leftout_fraction=config["leftout_fraction"],
            stratify_mode=config["stratify_mode"],
        )
    return {
        "chosen_c0": sel.chosen_c0,
        "estimates": list(sel.estimates),
        "grid": list(config["grid"]),
        "selector": sel.selector,
        "classifier": sel.classifier.to_dict(),
    }


def _exec_correspond(config):
    method = config["method"]
    approach = config["approach"]
    if approach is None:
        approach = "rebalancing" if method in GENERATIVE_METHODS else "post-training"
    root = Seed(config["seed"])
    sample = _load_sample(config, root.child(0))
    mixed, leftout = split_class0(sample, _leftout_size(config, sample.n0), root.child(1))
    if approach == "rebalancing":
        model = train_generative(mixed, method)
        scorer = posterior_score(model)
        context = model
    else:
        scorer = fit_scorer(mixed, method)
        context = scorer
    result = np_classifier(scorer, leftout, NpSettings(config["alpha"], config["delta"]))
    corr = np_to_cs(result, context, approach, verify_on=sample)
    return {
        "approach": approach,
        "t_np": result.threshold,
        "k_star": result.k_star,
        "c0": corr.c0,
        "n_checked": corr.n_checked,
        "n_excluded": corr.n_excluded,
        "np_classifier": result.classifier.to_dict(),
        "cs_classifier": corr.cs_classifier.to_dict(),
    }


def _experiment_config(config) -> ExperimentConfig:
    if config.get("algorithm") is None:
        raise ParseError("simulate needs either --preset or --algorithm")
    kind = config["algorithm"]
    return ExperimentConfig(
        kind=kind,
        dist=DistributionSpec(config["dist"], config["dim"]),
        n_train=config["train"],
        n_eval=config["eval"] or 100_000,
        reps=config["reps"] or 100,
        alpha=config["alpha"],
        delta=config["delta"],
        methods=tuple(config["methods"]),
        approach=config["approach"],
        stratify_mode=config["stratify_mode"],
        grid=tuple(config["grid"]) if kind in ("vanilla-cs", "tube-cs", "tubec-cs") else None,
        c0=config.get("c0"),
        leftout_size=config.get("leftout_size"),
        leftout_fraction=config["leftout_fraction"],
        m_leftout=config.get("m_leftout"),
        B=config["bootstrap"],
        B1=config["splits"],
        seed=config["seed"],
    )


def _exec_simulate(config):
    preset = config.get("preset")
    if preset == "csv-splits":
        if not config.get("data"):
            raise ParseError("the csv-splits preset needs --data")
        sample = _load_sample(config, Seed(config["seed"]).child(0))
        result = split_benchmark(
            sample, config["alpha"], config["delta"], tuple(config["grid"]),
            method=config["methods"][0], approach=config["approach"],
            splits=config["splits"], seed=config["seed"],
            B=config["bootstrap"], stratify_mode=config["stratify_mode"],
        )
        return {"benchmark": result}
    if preset:
        experiment_configs = preset_configs(
            preset, reps=config.get("reps"), n_eval=config.get("eval"),
            seed=config["seed"], dim=config["dim"],
        )
    else:
        experiment_configs = [_experiment_config(config)]
    reports = [run_experiment(c) for c in experiment_configs]
    return {"experiments": [r.to_dict() for r in reports]}


def _exec_evaluate(config):
    if not config.get("model"):
        raise ParseError("evaluate needs --model pointing at a report with a classifier")
    doc = load_document(config["model"])
    clf_dict = doc.get("results", {}).get("classifier")
    if clf_dict is None:
        raise ParseError(f"{config['model']} does not contain results.classifier")
    clf = classifier_from_dict(clf_dict)
    sample = _load_sample(config, Seed(config["seed"]).child(0))
    errors = empirical_errors(clf, sample)
    return {
        "type1": errors.type1,
        "type2": errors.type2,
        "overall": errors.overall,
        "pi0_hat": errors.pi0_hat,
        "pi1_hat": errors.pi1_hat,
        "n": sample.n,
    }


_EXECUTORS = {
    "np-train": _exec_np_train,
    "vanilla-cs": _exec_vanilla_cs,
    "tubec": _exec_tubec,
    "tube": _exec_tube,
    "tube-cs": lambda c: _exec_selector(c, "tube-cs"),
    "tubec-cs": lambda c: _exec_selector(c, "tubec-cs"),
    "correspond": _exec_correspond,
    "simulate": _exec_simulate,
    "evaluate": _exec_evaluate,
}


def execute(command: str, config: dict) -> dict:
    """Run one subcommand from a fully resolved configuration."""
    if command not in _EXECUTORS:
        raise ParseError(f"unknown command {command!r}")
    return _EXECUTORS[command](config)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npcs",
        description=(
            "Asymmetric binary classification with type I error control: "
            "order-statistic thresholding, cost-sensitive training, and "
            "bootstrap upper bounds on the type I error."
        ),
        epilog=(
            "exit codes: 0 success, 1 internal error, 2 parse error, "
            "3 left-out sample too small, 4 no feasible cost"
        ),
    )
    parser.add_argument("--version", action="version", version=f"npcs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_flags(p):
        p.add_argument("--data", help="CSV file with a header row")
        p.add_argument("--label-column", dest="label_column")
        p.add_argument("--class0-value", dest="class0_value",
                       help="label value marking the severe class (class 0)")
        p.add_argument("--expect", help="expected 'n,d,frac' shape; warn on mismatch")
        p.add_argument("--dist", choices=("gaussian", "t", "mixture"))
        p.add_argument("--dim", type=int)
        p.add_argument("--train", type=int, help="generated training sample size")
        p.add_argument("--seed", type=int)
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--out", help="write the report here instead of stdout")

    def add(p, *flags, **kw):
        p.add_argument(*flags, **kw)

    p = sub.add_parser("np-train", help="order-statistic threshold selection")
    add_data_flags(p)
    add(p, "--method")
    add(p, "--alpha", type=float)
    add(p, "--delta", type=float)
    add(p, "--leftout-size", dest="leftout_size", type=int)
    add(p, "--leftout-fraction", dest="leftout_fraction", type=float)

    p = sub.add_parser("vanilla-cs", help="empirical cost selection")
    add_data_flags(p)
    add(p, "--method")
    add(p, "--approach")
    add(p, "--stratify-mode", dest="stratify_mode")
    add(p, "--alpha", type=float)
    add(p, "--c0-grid", dest="c0_grid", help="candidate costs as start:step:end")

    p = sub.add_parser("tubec", help="bootstrap bound on a split-trained classifier")
    add_data_flags(p)
    add(p, "--method")
    add(p, "--approach")
    add(p, "--stratify-mode", dest="stratify_mode")
    add(p, "--c0", type=float)
    add(p, "--delta", type=float)
    add(p, "--bootstrap", type=int)
    add(p, "--leftout-size", dest="leftout_size", type=int)
    add(p, "--leftout-fraction", dest="leftout_fraction", type=float)

    p = sub.add_parser("tube", help="full-sample bias-corrected bound")
    add_data_flags(p)
    add(p, "--method")
    add(p, "--approach")
    add(p, "--stratify-mode", dest="stratify_mode")
    add(p, "--c0", type=float)
    add(p, "--delta", type=float)
    add(p, "--bootstrap", type=int)
    add(p, "--splits", type=int)
    add(p, "--leftout-fraction", dest="leftout_fraction", type=float)

    for name, help_text in (
        ("tube-cs", "cost selection by TUBE estimates"),
        ("tubec-cs", "cost selection by TUBEc estimates"),
    ):
        p = sub.add_parser(name, help=help_text)
        add_data_flags(p)
        add(p, "--method")
        add(p, "--approach")
        add(p, "--stratify-mode", dest="stratify_mode")
        add(p, "--alpha", type=float)
        add(p, "--delta", type=float)
        add(p, "--c0-grid", dest="c0_grid")
        add(p, "--bootstrap", type=int)
        if name == "tube-cs":
            add(p, "--splits", type=int)
        add(p, "--leftout-fraction", dest="leftout_fraction", type=float)

    p = sub.add_parser("correspond", help="map an NP classifier to an equal-cost CS one")
    add_data_flags(p)
    add(p, "--method")
    add(p, "--approach", choices=("rebalancing", "post-training"))
    add(p, "--alpha", type=float)
    add(p, "--delta", type=float)
    add(p, "--leftout-size", dest="leftout_size", type=int)
    add(p, "--leftout-fraction", dest="leftout_fraction", type=float)

    p = sub.add_parser("simulate", help="Monte-Carlo experiment harness")
    add_data_flags(p)
    add(p, "--preset", choices=PRESETS)
    add(p, "--algorithm",
        choices=("np", "vanilla-cs", "tube-cs", "tubec-cs", "cs-fixed",
                 "tubec-estimators", "equivalence"))
    add(p, "--methods", help="comma-separated method list")
    add(p, "--approach")
    add(p, "--stratify-mode", dest="stratify_mode")
    add(p, "--alpha", type=float)
    add(p, "--delta", type=float)
    add(p, "--reps", type=int)
    add(p, "--eval", type=int, help="evaluation (population proxy) sample size")
    add(p, "--c0", type=float)
    add(p, "--c0-grid", dest="c0_grid")
    add(p, "--m-leftout", dest="m_leftout", type=int)
    add(p, "--leftout-size", dest="leftout_size", type=int)
    add(p, "--leftout-fraction", dest="leftout_fraction", type=float)
    add(p, "--bootstrap", type=int)
    add(p, "--splits", type=int)

    p = sub.add_parser("evaluate", help="score a saved classifier on a CSV file")
    add_data_flags(p)
    add(p, "--model", help="report file containing results.classifier")

    p = sub.add_parser("replay", help="re-run the config embedded in a report")
    p.add_argument("report", help="report file to replay")
    p.add_argument("--out", help="write the replayed report here")
    p.add_argument("--check", action="store_true",
                   help="exit 1 unless the replay matches (timestamp aside)")

    return parser


def _run_replay(args) -> int:
    source = load_document(args.report)
    command = source["command"]
    config = source["config"]
    start = time.perf_counter()
    results = execute(command, config)
    doc = build_document(command, config, results, __version__,
                         elapsed_seconds=time.perf_counter() - start)
    text = dump_document(doc, args.out)
    if args.out is None:
        sys.stdout.write(text)
    if args.check and not documents_equal(source, doc):
        print("replay does not reproduce the source report", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "replay":
            return _run_replay(args)
        file_config = {}
        if getattr(args, "config", None):
            import json

            with open(args.config, "r", encoding="utf-8") as fh:
                file_config = json.load(fh)
        config = _resolve_config(args.command, args, file_config)
        start = time.perf_counter()
        results = execute(args.command, config)
        doc = build_document(args.command, config, results, __version__,
                             elapsed_seconds=time.perf_counter() - start)
        text = dump_document(doc, getattr(args, "out", None))
        if getattr(args, "out", None) is None:
            sys.stdout.write(text)
        return EXIT_OK
    except MinSampleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MIN_SAMPLE
    except NoFeasibleCostError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.profile:
            for c0, est in exc.profile:
                print(f"  c0={c0:.4g}: estimate {est:.4g}", file=sys.stderr)
        return EXIT_NO_FEASIBLE
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NpcsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
