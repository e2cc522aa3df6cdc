"""Command-line harness for randomized verification campaigns.

Subcommands
-----------
verify-s-theorems
    Both entropy inequalities on random states and probings: the expected
    branch entropy after observation never exceeds the initial entropy, and
    the initial entropy never exceeds the entropy after decoherence.
majorization
    Spectral dominance campaigns: the Schur-product dominance, the two-sided
    pinching dominance, and the spectrum-sum dominance for Hermitian pairs.
counterexample
    Reproduce one of the two fixed measurements that break an inequality
    (1 breaks observation, 2 breaks decoherence) and check every reported
    value exactly.
holevo
    Average branch entropy never exceeds the entropy of the average state.
luders-equiv
    Pinching over a diagonal projector partition equals the Schur form with
    the block overlap matrix, to 1e-12.
povm-classify
    Structural purity-preservation classification of a measurement JSON file.

Reports stream to stdout as JSON (default) or CSV margin tables; errors go
to stderr.  Exit code 0 means no hard violation, 1 means at least one, and 2
signals usage or input errors.  Rerunning with identical flags and seed
reproduces the report byte for byte (timestamp field aside).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from . import matcore, processes, sampling, serialize
from .entropy import entropy_of_spectrum, parse_functional, von_neumann
from .errors import ValidationError
from .majorization import check_fan, check_pinching_double, check_schur_majorization, entropy_gap
from .povm import ancilla_factors, apply_povm, counterexample_1, counterexample_2
from .states import diagonal_projector_partition, gram_from_projectors, ZERO_PROBABILITY

#: Slack for hard inequality assertions (the --tol default).
HARD_TOL = 1e-9

#: Max-norm bound for exact-identity checks (averaging vs decoherence,
#: pinching vs block Schur form, counterexample regressions).
CONSISTENCY_TOL = 1e-12

#: Componentwise spectrum tolerance used by the triviality flags.
TRIVIALITY_TOL = 1e-9

#: Nontrivial trials with margins at or below this are counted as
#: near-trivial instead of being held to strictness.
NEAR_TRIVIAL_MARGIN = 1e-7

#: log-det campaigns skip states whose smallest eigenvalue is below this.
SINGULAR_SKIP = 1e-12

LN2 = math.log(2.0)


@dataclass(frozen=True)
class CampaignConfig:
    command: str
    seed: int = 0
    dim: int = 2
    trials: int = 100
    response_dim: int | None = None
    functionals: tuple[str, ...] = ("von-neumann",)
    tol: float = HARD_TOL
    fmt: str = "json"
    units: str = "nats"
    ensemble_size: int | None = None
    which: int | None = None
    povm_file: str | None = None


@dataclass
class Row:
    """One (trial, functional, inequality-side) margin record, in nats."""

    trial: int
    dim: int
    functional: str
    side: str
    lhs: float
    rhs: float
    margin: float
    trivial: bool | None
    violation: bool
    strict: bool | None = None


@dataclass
class CampaignResult:
    report: dict
    rows: list[Row]
    exit_code: int


def sanitize_report(obj):
    """Replace non-finite floats with strings so the output is strict JSON."""
    if isinstance(obj, dict):
        return {key: sanitize_report(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize_report(value) for value in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return "nan" if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    return obj


def _scaled(value: float, scale: float) -> float:
    return value * scale if math.isfinite(value) else value


def _row_dict(row: Row, scale: float) -> dict:
    out = {
        "trial": row.trial,
        "dim": row.dim,
        "functional": row.functional,
        "side": row.side,
        "lhs": _scaled(row.lhs, scale),
        "rhs": _scaled(row.rhs, scale),
        "margin": _scaled(row.margin, scale),
        "trivial": row.trivial,
        "violation": row.violation,
    }
    if row.strict is not None:
        out["strict"] = row.strict
    return out


def _margin_summary(rows: list[Row], scale: float) -> dict:
    finite = [_scaled(r.margin, scale) for r in rows if math.isfinite(r.margin)]
    summary = {
        "rows": len(rows),
        "violations": sum(r.violation for r in rows),
        "infinite_margins": sum(not math.isfinite(r.margin) for r in rows),
    }
    if finite:
        summary["margin_min"] = min(finite)
        summary["margin_max"] = max(finite)
        summary["margin_mean"] = sum(finite) / len(finite)
    return summary


def _base_report(cfg: CampaignConfig, flags: dict) -> dict:
    return {
        "command": cfg.command,
        "seed": cfg.seed,
        "flags": flags,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _display_scale(cfg: CampaignConfig) -> float:
    return 1.0 / LN2 if cfg.units == "bits" else 1.0


def run_s_theorems(cfg: CampaignConfig) -> CampaignResult:
    """Random-probing campaign over both entropy inequalities.

    Per trial: sample a state and a probing, form the observation branches
    and the decohered state, and check
    expected branch entropy <= initial entropy <= decohered entropy
    for every selected functional.  The averaging identity (branch average
    equals the Schur form with the row Gram matrix) is asserted to 1e-12 as
    a side condition.
    """
    functionals = [parse_functional(text) for text in cfg.functionals]
    response_dim = cfg.response_dim or cfg.dim
    rows: list[Row] = []
    skipped_singular = 0
    near_trivial = 0
    consistency_max = 0.0
    for trial in range(cfg.trials):
        rng = sampling.trial_stream(cfg.seed, trial)
        rho = sampling.random_density(cfg.dim, rng)
        probe = sampling.random_probing(cfg.dim, response_dim, rng)
        ensemble = processes.observe(rho, probe)
        averaged = processes.ensemble_average(ensemble)
        decohered = processes.decohere(rho, processes.response_gram(probe))
        consistency_max = max(consistency_max, matcore.max_abs(averaged.mat - decohered.mat))

        lam_rho = matcore.hermitian_spectrum(rho.mat)
        lam_dec = matcore.hermitian_spectrum(decohered.mat)
        branches = [
            (outcome.probability, matcore.hermitian_spectrum(outcome.state.mat))
            for outcome in ensemble.live()
        ]
        obs_trivial = all(matcore.max_abs(lam - lam_rho) <= TRIVIALITY_TOL for _, lam in branches)
        dec_trivial = matcore.max_abs(lam_dec - lam_rho) <= TRIVIALITY_TOL

        for functional in functionals:
            if functional.kind == "log-det" and lam_rho[-1] < SINGULAR_SKIP:
                skipped_singular += 1
                continue
            s_rho = entropy_of_spectrum(lam_rho, functional)
            s_dec = entropy_of_spectrum(lam_dec, functional)
            s_expected = sum(p * entropy_of_spectrum(lam, functional) for p, lam in branches)
            for side, lhs, rhs, trivial in (
                ("observation", s_expected, s_rho, obs_trivial),
                ("decoherence", s_rho, s_dec, dec_trivial),
            ):
                margin = entropy_gap(rhs, lhs)
                violation = not (lhs <= rhs + cfg.tol)
                strict = None
                if not trivial and not violation:
                    strict = margin > NEAR_TRIVIAL_MARGIN
                    if not strict:
                        near_trivial += 1
                rows.append(
                    Row(trial, cfg.dim, functional.label, side, lhs, rhs, margin, trivial, violation, strict)
                )

    scale = _display_scale(cfg)
    consistency_ok = consistency_max <= CONSISTENCY_TOL
    report = _base_report(
        cfg,
        {
            "dim": cfg.dim,
            "trials": cfg.trials,
            "response_dim": response_dim,
            "entropy": [f.label for f in functionals],
            "tol": cfg.tol,
            "units": cfg.units,
        },
    )
    summary = _margin_summary(rows, scale)
    summary["near_trivial"] = near_trivial
    summary["skipped_singular"] = skipped_singular
    summary["consistency_max_residual"] = consistency_max
    summary["consistency_ok"] = consistency_ok
    report["summary"] = summary
    report["rows"] = [_row_dict(r, scale) for r in rows]
    exit_code = 0 if summary["violations"] == 0 and consistency_ok else 1
    return CampaignResult(report, rows, exit_code)


def _dominance_row(trial: int, dim: int, side: str, dominator, dominated, tol: float) -> Row:
    """Margin record for one prefix-sum dominance check, at its worst prefix."""
    lam = -np.sort(-np.asarray(dominator, dtype=float))
    mu = -np.sort(-np.asarray(dominated, dtype=float))
    prefix_lam = np.cumsum(lam)
    prefix_mu = np.cumsum(mu)
    margins = prefix_lam - prefix_mu
    worst = int(np.argmin(margins))
    sum_residual = abs(float(prefix_lam[-1] - prefix_mu[-1]))
    margin = float(margins[worst])
    violation = margin < -tol or sum_residual > tol
    return Row(trial, dim, "", side, float(prefix_mu[worst]), float(prefix_lam[worst]), margin, None, violation)


def run_majorization(cfg: CampaignConfig) -> CampaignResult:
    """Spectral dominance campaign: Schur products, pinchings, spectrum sums."""
    rows: list[Row] = []
    for trial in range(cfg.trials):
        rng = sampling.trial_stream(cfg.seed, trial)
        rho = sampling.random_density(cfg.dim, rng)
        env = sampling.random_gram(cfg.dim, cfg.response_dim or cfg.dim, rng)
        schur = check_schur_majorization(rho, env, cfg.tol, trial)
        rows.append(
            _dominance_row(trial, cfg.dim, "schur", schur.spectra["rho"], schur.spectra["schur_product"], cfg.tol)
        )

        # the upper pinching dominance needs a PSD input (zero-diagonal-block
        # counterexamples break it for indefinite matrices), so sample a state
        pinch_input = sampling.random_density(cfg.dim, rng).mat
        partition = sampling.random_projector_partition(
            cfg.dim, sampling.random_block_sizes(cfg.dim, rng), rng
        )
        pinching = check_pinching_double(pinch_input, partition, cfg.tol, trial)
        rows.append(
            _dominance_row(
                trial, cfg.dim, "pinching-upper",
                pinching.spectra["pinched_parts_sum"], pinching.spectra["matrix"], cfg.tol,
            )
        )
        rows.append(
            _dominance_row(
                trial, cfg.dim, "pinching-lower",
                pinching.spectra["matrix"], pinching.spectra["pinched"], cfg.tol,
            )
        )

        a = sampling.random_hermitian(cfg.dim, rng)
        b = sampling.random_hermitian(cfg.dim, rng)
        fan = check_fan(a, b, cfg.tol, trial)
        rows.append(
            _dominance_row(trial, cfg.dim, "fan", fan.spectra["sum_of_spectra"], fan.spectra["spectrum_of_sum"], cfg.tol)
        )

    report = _base_report(
        cfg,
        {
            "dim": cfg.dim,
            "trials": cfg.trials,
            "response_dim": cfg.response_dim or cfg.dim,
            "tol": cfg.tol,
        },
    )
    summary = _margin_summary(rows, 1.0)
    report["summary"] = summary
    report["rows"] = [_row_dict(r, 1.0) for r in rows]
    return CampaignResult(report, rows, 0 if summary["violations"] == 0 else 1)


def run_holevo(cfg: CampaignConfig) -> CampaignResult:
    """Random-mixture campaign: average branch entropy vs entropy of the average."""
    functionals = [parse_functional(text) for text in cfg.functionals]
    rows: list[Row] = []
    for trial in range(cfg.trials):
        rng = sampling.trial_stream(cfg.seed, trial)
        size = cfg.ensemble_size or int(rng.integers(2, 6))
        ensemble = sampling.random_ensemble(cfg.dim, size, rng)
        average = processes.ensemble_average(ensemble)
        lam_avg = matcore.hermitian_spectrum(average.mat)
        branches = [
            (outcome.probability, matcore.hermitian_spectrum(outcome.state.mat))
            for outcome in ensemble.live()
        ]
        for functional in functionals:
            lhs = sum(p * entropy_of_spectrum(lam, functional) for p, lam in branches)
            rhs = entropy_of_spectrum(lam_avg, functional)
            margin = entropy_gap(rhs, lhs)
            violation = not (lhs <= rhs + cfg.tol)
            rows.append(Row(trial, cfg.dim, functional.label, "holevo", lhs, rhs, margin, None, violation))

    scale = _display_scale(cfg)
    report = _base_report(
        cfg,
        {
            "dim": cfg.dim,
            "trials": cfg.trials,
            "ensemble_size": cfg.ensemble_size,
            "entropy": [f.label for f in functionals],
            "tol": cfg.tol,
            "units": cfg.units,
        },
    )
    summary = _margin_summary(rows, scale)
    report["summary"] = summary
    report["rows"] = [_row_dict(r, scale) for r in rows]
    return CampaignResult(report, rows, 0 if summary["violations"] == 0 else 1)


def run_luders(cfg: CampaignConfig) -> CampaignResult:
    """Random diagonal partitions: pinching equals the block Schur form to 1e-12."""
    rows: list[Row] = []
    for trial in range(cfg.trials):
        rng = sampling.trial_stream(cfg.seed, trial)
        rho = sampling.random_density(cfg.dim, rng)
        partition = diagonal_projector_partition(sampling.random_block_sizes(cfg.dim, rng))
        pinched = processes.luders(rho, partition)
        schur_form = processes.decohere(rho, gram_from_projectors(partition))
        residual = matcore.max_abs(pinched.mat - schur_form.mat)
        rows.append(
            Row(
                trial, cfg.dim, "", "luders-equivalence",
                residual, CONSISTENCY_TOL, CONSISTENCY_TOL - residual,
                None, residual > CONSISTENCY_TOL,
            )
        )

    report = _base_report(cfg, {"dim": cfg.dim, "trials": cfg.trials})
    summary = _margin_summary(rows, 1.0)
    report["summary"] = summary
    report["rows"] = [_row_dict(r, 1.0) for r in rows]
    return CampaignResult(report, rows, 0 if summary["violations"] == 0 else 1)


def run_counterexample(cfg: CampaignConfig) -> CampaignResult:
    """Reproduce one fixed inequality-breaking measurement exactly.

    Hard checks (all to 1e-12): branch probabilities, live branch states, and
    the von Neumann entropy jump; plus the purity-preservation classification
    and the identity of the violated side.  The selected functional's
    entropies are reported alongside.
    """
    functional = parse_functional(cfg.functionals[0])
    vn = von_neumann()
    if cfg.which == 1:
        measurement, initial = counterexample_1()
        expected_probs = [0.5, 0.5, 0.0, 0.0]
        expected_state = np.eye(2, dtype=complex) / 2.0
        expected_purity_preserving = False
        violated_side = "observation"
        expected_before_vn, expected_jump_vn = 0.0, LN2
    else:
        measurement, initial = counterexample_2()
        expected_probs = [0.5, 0.5]
        expected_state = np.zeros((2, 2), dtype=complex)
        expected_state[0, 0] = 1.0
        expected_purity_preserving = True
        violated_side = "decoherence"
        expected_before_vn, expected_jump_vn = LN2, 0.0

    ensemble = apply_povm(initial, measurement)
    probabilities = [outcome.probability for outcome in ensemble]
    prob_residual = max(abs(p - e) for p, e in zip(probabilities, expected_probs))
    outcome_residual = max(
        matcore.max_abs(outcome.state.mat - expected_state)
        for outcome in ensemble
        if outcome.probability > ZERO_PROBABILITY
    )

    lam_initial = matcore.hermitian_spectrum(initial.mat)
    average = processes.ensemble_average(ensemble)
    lam_average = matcore.hermitian_spectrum(average.mat)
    branches = [
        (outcome.probability, matcore.hermitian_spectrum(outcome.state.mat))
        for outcome in ensemble.live()
    ]

    def entropies(f):
        before = entropy_of_spectrum(lam_initial, f)
        expected_after = sum(p * entropy_of_spectrum(lam, f) for p, lam in branches)
        of_average = entropy_of_spectrum(lam_average, f)
        return before, expected_after, of_average

    before_vn, expected_vn, average_vn = entropies(vn)
    # the measured quantity on the violated side, against the initial entropy
    jump_value = expected_vn if cfg.which == 1 else average_vn
    purity_preserving = ancilla_factors(measurement) is not None

    checks = [
        {"name": "probabilities", "pass": prob_residual <= CONSISTENCY_TOL, "residual": prob_residual},
        {"name": "outcome-states", "pass": outcome_residual <= CONSISTENCY_TOL, "residual": outcome_residual},
        {
            "name": "entropy-before",
            "pass": abs(before_vn - expected_before_vn) <= CONSISTENCY_TOL,
            "residual": abs(before_vn - expected_before_vn),
        },
        {
            "name": "entropy-jump",
            "pass": abs(jump_value - expected_jump_vn) <= CONSISTENCY_TOL,
            "residual": abs(jump_value - expected_jump_vn),
        },
        {
            "name": "purity-preserving-classification",
            "pass": purity_preserving == expected_purity_preserving,
            "residual": 0.0 if purity_preserving == expected_purity_preserving else 1.0,
        },
    ]

    rows: list[Row] = []
    labels = [vn.label] + ([functional.label] if functional.label != vn.label else [])
    for label in labels:
        f = parse_functional(label)
        before, expected_after, of_average = entropies(f)
        obs_margin = entropy_gap(before, expected_after)
        dec_margin = entropy_gap(of_average, before)
        rows.append(
            Row(0, 2, label, "observation", expected_after, before, obs_margin, None, obs_margin < -cfg.tol)
        )
        rows.append(
            Row(0, 2, label, "decoherence", before, of_average, dec_margin, None, dec_margin < -cfg.tol)
        )
    observed_violation = next((r.side for r in rows if r.functional == vn.label and r.violation), None)
    checks.append(
        {
            "name": "violated-side",
            "pass": observed_violation == violated_side,
            "residual": 0.0 if observed_violation == violated_side else 1.0,
        }
    )

    scale = _display_scale(cfg)
    sel_before, sel_expected, sel_average = entropies(functional)
    report = _base_report(cfg, {"which": cfg.which, "entropy": functional.label, "units": cfg.units})
    report["probabilities"] = probabilities
    report["expected_probabilities"] = expected_probs
    report["purity_preserving"] = purity_preserving
    report["expected_purity_preserving"] = expected_purity_preserving
    report["violated_side"] = violated_side
    report["entropy"] = {
        "functional": functional.label,
        "before": _scaled(sel_before, scale),
        "expected_after_observation": _scaled(sel_expected, scale),
        "of_average": _scaled(sel_average, scale),
    }
    report["checks"] = checks
    summary = _margin_summary(rows, scale)
    summary["checks_failed"] = sum(not c["pass"] for c in checks)
    report["summary"] = summary
    report["rows"] = [_row_dict(r, scale) for r in rows]
    exit_code = 0 if summary["checks_failed"] == 0 else 1
    return CampaignResult(report, rows, exit_code)


def run_povm_classify(cfg: CampaignConfig) -> CampaignResult:
    """Classify a measurement file as general or purity-preserving."""
    measurement = serialize.load_povm(cfg.povm_file)
    factors = ancilla_factors(measurement)
    report = _base_report(cfg, {"file": cfg.povm_file})
    if factors is None:
        report["classification"] = "general"
    else:
        report["classification"] = "purity-preserving"
        report["probing_realizable"] = "unknown"
        report["ancilla_basis"] = [serialize.matrix_to_json(v.reshape(-1, 1)) for v in factors]
    report["object_dim"] = measurement.object_dim
    report["ancilla_dim"] = measurement.ancilla_dim
    report["summary"] = {"rows": 0, "violations": 0}
    report["rows"] = []
    return CampaignResult(report, [], 0)


_DISPATCH = {
    "verify-s-theorems": run_s_theorems,
    "majorization": run_majorization,
    "counterexample": run_counterexample,
    "holevo": run_holevo,
    "luders-equiv": run_luders,
    "povm-classify": run_povm_classify,
}


def _add_seeded(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="campaign seed; trial t draws from child stream (seed, t)")
    parser.add_argument("--dim", type=int, default=2, help="state dimension")
    parser.add_argument("--trials", type=int, default=100, help="number of trials")


def _add_entropy(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--entropy",
        action="append",
        metavar="F",
        help="entropy selector, repeatable: von-neumann | linear | renyi:<alpha> | log-det",
    )
    parser.add_argument("--units", choices=("nats", "bits"), default="nats", help="display units")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, default=HARD_TOL, help="slack for hard inequality checks")
    parser.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decobs",
        description="Randomized verification of entropy inequalities for decoherence and observation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-s-theorems", help="check both entropy inequalities on random probings")
    _add_seeded(p)
    p.add_argument("--response-dim", type=int, default=None, help="perception basis size (default: dim)")
    _add_entropy(p)
    _add_output(p)

    p = sub.add_parser("majorization", help="spectral dominance campaigns")
    _add_seeded(p)
    p.add_argument("--response-dim", type=int, default=None, help="overlap response dimension (default: dim)")
    _add_output(p)

    p = sub.add_parser("counterexample", help="reproduce an inequality-breaking measurement")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    _add_entropy(p)
    _add_output(p)

    p = sub.add_parser("holevo", help="average branch entropy vs entropy of the average")
    _add_seeded(p)
    p.add_argument("--ensemble-size", type=int, default=None, help="branches per mixture (default: random 2-5)")
    _add_entropy(p)
    _add_output(p)

    p = sub.add_parser("luders-equiv", help="pinching equals block Schur form")
    _add_seeded(p)
    p.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")

    p = sub.add_parser("povm-classify", help="classify a measurement JSON file")
    p.add_argument("povm_file", help="path to a measurement JSON file")
    p.add_argument("--format", choices=("json",), default="json", dest="fmt")

    return parser


def _config_from_args(args: argparse.Namespace) -> CampaignConfig:
    selectors = getattr(args, "entropy", None) or ["von-neumann"]
    for text in selectors:
        parse_functional(text)
    cfg = CampaignConfig(
        command=args.command,
        seed=getattr(args, "seed", 0),
        dim=getattr(args, "dim", 2),
        trials=getattr(args, "trials", 100),
        response_dim=getattr(args, "response_dim", None),
        functionals=tuple(selectors),
        tol=getattr(args, "tol", HARD_TOL),
        fmt=getattr(args, "fmt", "json"),
        units=getattr(args, "units", "nats"),
        ensemble_size=getattr(args, "ensemble_size", None),
        which=getattr(args, "which", None),
        povm_file=getattr(args, "povm_file", None),
    )
    if cfg.dim < 1:
        raise ValueError("--dim must be >= 1")
    if cfg.trials < 1:
        raise ValueError("--trials must be >= 1")
    if cfg.response_dim is not None and cfg.response_dim < 1:
        raise ValueError("--response-dim must be >= 1")
    if cfg.ensemble_size is not None and cfg.ensemble_size < 1:
        raise ValueError("--ensemble-size must be >= 1")
    if cfg.tol <= 0:
        raise ValueError("--tol must be positive")
    return cfg


def _emit(result: CampaignResult, cfg: CampaignConfig) -> None:
    if cfg.fmt == "csv":
        scale = _display_scale(cfg)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["trial", "dim", "functional", "side", "lhs", "rhs", "margin", "trivial"])
        for row in result.rows:
            trivial = "" if row.trivial is None else ("true" if row.trivial else "false")
            writer.writerow(
                [
                    row.trial,
                    row.dim,
                    row.functional,
                    row.side,
                    repr(_scaled(row.lhs, scale)),
                    repr(_scaled(row.rhs, scale)),
                    repr(_scaled(row.margin, scale)),
                    trivial,
                ]
            )
    else:
        print(json.dumps(sanitize_report(result.report), indent=2))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        result = _DISPATCH[args.command](cfg)
    except (ValidationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(result, cfg)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
