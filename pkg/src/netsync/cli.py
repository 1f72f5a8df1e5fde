"""Command-line interface.

Subcommands: generate, analyze, fit, resilience, sync, validate, pipeline.
Exit codes: 0 success, 1 validation failure, 2 input error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .edgelist import ingest_edge_list, write_edge_list
from .errors import InputError, NumericalError, ToolkitError, ValidationError
from .fixture import load_fixture, validate_fixture
from .generators import BAParams, ERParams, generate_ba, generate_er, rng_from_seed
from .metrics import node_stats, summarize
from .powerlaw import distribution_comparison, fit_mle
from .report import (
    PipelineConfig,
    comparison_csv,
    ensemble_csv,
    node_stats_csv,
    report_to_json,
    run_pipeline,
    trace_csv,
    trajectory_csv,
    _node_stats_dicts,
    _summary_dict,
)
from .resilience import RandomError, TargetedAttack, run_error_ensemble, run_resilience
from .synchronization import SyncConfig, simulate, spectral_stability


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (PCG64)")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument(
        "--deterministic",
        action="store_true",
        help="omit timestamps so repeated runs are byte-identical",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netsync",
        description="Complex-network toolkit: generation, metrics, power-law "
        "fitting, resilience sweeps, and synchronization analysis.",
    )
    parser.add_argument("--version", action="version", version=f"netsync {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="synthesize a graph")
    gen_sub = p_gen.add_subparsers(dest="model", required=True)
    p_ba = gen_sub.add_parser("ba", help="preferential-attachment scale-free graph")
    p_ba.add_argument("--n", type=int, required=True)
    p_ba.add_argument("--m", type=int, required=True, help="edges per new node")
    p_ba.add_argument("--m0", type=int, default=None, help="seed core size (default m+1)")
    _add_common(p_ba)
    p_er = gen_sub.add_parser("er", help="uniform random graph with exact edge count")
    p_er.add_argument("--n", type=int, required=True)
    p_er.add_argument("--edges", type=int, required=True)
    _add_common(p_er)

    p_an = sub.add_parser("analyze", help="summary + per-node centralities")
    p_an.add_argument("--edge-list", required=True)
    p_an.add_argument("--threads", type=int, default=1)
    _add_common(p_an)

    p_fit = sub.add_parser("fit", help="power-law fit of the degree sequence")
    p_fit.add_argument("--edge-list", required=True)
    p_fit.add_argument(
        "--compare-er",
        action="store_true",
        help="also emit degree-distribution points against a size-matched random graph",
    )
    p_fit.add_argument("--comparison-out", help="CSV path for the comparison points")
    _add_common(p_fit)

    p_res = sub.add_parser("resilience", help="node-removal sweep")
    p_res.add_argument("--edge-list", required=True)
    p_res.add_argument("--strategy", choices=["error", "attack"], required=True)
    p_res.add_argument("--seeds", type=int, default=1, help="ensemble size for error runs")
    p_res.add_argument("--record-every", type=float, default=0.02)
    _add_common(p_res)

    p_sync = sub.add_parser("sync", help="spectral stability / coupled simulation")
    p_sync.add_argument("--edge-list", required=True)
    p_sync.add_argument("--spectral-only", action="store_true")
    p_sync.add_argument("--closeness-threshold", type=float, default=None)
    p_sync.add_argument("--dynamics", default="zero", help="zero | linear:A | logistic:R")
    p_sync.add_argument("--c", type=float, default=1.0)
    p_sync.add_argument("--dt", type=float, default=0.01)
    p_sync.add_argument("--tmax", type=float, default=50.0)
    p_sync.add_argument("--tol", type=float, default=1e-6)
    p_sync.add_argument("--state-dim", type=int, default=1)
    p_sync.add_argument("--full", action="store_true", help="include per-node states")
    _add_common(p_sync)

    p_val = sub.add_parser("validate", help="consistency checks of the reference fixture")
    p_val.add_argument("--fixture", help="CSV path (default: packaged EEN statistics)")
    _add_common(p_val)

    p_pipe = sub.add_parser("pipeline", help="run configured stages, emit one report")
    p_pipe.add_argument("--config", required=True, help="JSON config path")
    p_pipe.add_argument("--threads", type=int, default=None)
    _add_common(p_pipe)

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.model == "ba":
        graph = generate_ba(BAParams(n=args.n, m=args.m, m0=args.m0, seed=args.seed))
    else:
        graph = generate_er(ERParams(n=args.n, m=args.edges, seed=args.seed))
    if args.out:
        write_edge_list(graph, args.out)
    else:
        from .edgelist import serialize_edge_list

        sys.stdout.write(serialize_edge_list(graph))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    result = ingest_edge_list(args.edge_list)
    stats = node_stats(result.graph, threads=args.threads)
    if args.format == "csv":
        _emit(node_stats_csv(stats), args.out)
        return 0
    payload = {
        "summary": _summary_dict(summarize(result.graph)),
        "node_stats": _node_stats_dicts(stats),
        "input": {
            "edge_list": args.edge_list,
            "duplicates_collapsed": result.duplicate_count,
        },
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _cmd_fit(args: argparse.Namespace) -> int:
    result = ingest_edge_list(args.edge_list)
    fit = fit_mle(result.graph.degrees())
    payload = {
        "gamma": fit.gamma,
        "k_min": fit.k_min,
        "ks_stat": fit.ks_stat,
        "n_tail": fit.n_tail,
        "dropped_zeros": fit.dropped_zeros,
    }
    if args.compare_er:
        reference = generate_er(
            ERParams(n=result.graph.n, m=result.graph.m, seed=args.seed)
        )
        cmp_points = distribution_comparison(result.graph, reference)
        csv_text = comparison_csv(cmp_points.observed, cmp_points.reference)
        if args.comparison_out:
            Path(args.comparison_out).write_text(csv_text)
        else:
            payload["comparison_csv"] = csv_text
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _cmd_resilience(args: argparse.Namespace) -> int:
    result = ingest_edge_list(args.edge_list)
    if args.strategy == "attack":
        trace = run_resilience(result.graph, TargetedAttack(), args.record_every)
        _emit(trace_csv(trace), args.out)
    elif args.seeds <= 1:
        trace = run_resilience(
            result.graph, RandomError(seed=args.seed), args.record_every
        )
        _emit(trace_csv(trace), args.out)
    else:
        seeds = [args.seed + i for i in range(args.seeds)]
        ensemble = run_error_ensemble(result.graph, seeds, args.record_every)
        _emit(ensemble_csv(ensemble), args.out)
    return 0


def _cmd_sync(args: argparse.Namespace) -> int:
    result = ingest_edge_list(args.edge_list)
    if args.spectral_only:
        rep = spectral_stability(result.graph, args.closeness_threshold)
        payload = {
            "lambda1": rep.lambda1,
            "lambda2": rep.lambda2,
            "gap": rep.gap,
            "stable": rep.stable,
            "zero_multiplicity": rep.zero_multiplicity,
            "closeness_threshold": rep.closeness_threshold,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        return 0
    cfg = SyncConfig(
        c=args.c,
        dt=args.dt,
        t_max=args.tmax,
        tol=args.tol,
        state_dim=args.state_dim,
        dynamics=args.dynamics,
    )
    rng = rng_from_seed(args.seed)
    x0 = rng.standard_normal((result.graph.n, args.state_dim))
    traj = simulate(result.graph, cfg, x0)
    _emit(trajectory_csv(traj, full=args.full), args.out)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    rows = load_fixture(args.fixture)
    validation = validate_fixture(rows)
    lines = []
    for check in validation.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"[{status}] {check.name}: {check.detail}")
    lines.append(
        f"fixture {'valid' if validation.passed else 'INVALID'} "
        f"({sum(c.passed for c in validation.checks)}/{len(validation.checks)} checks)"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if validation.passed else 1


def _cmd_pipeline(args: argparse.Namespace) -> int:
    raw = json.loads(Path(args.config).read_text())
    cfg = PipelineConfig.from_dict(raw)
    if args.threads is not None:
        cfg.threads = args.threads
    if args.deterministic:
        cfg.deterministic = True
    report = run_pipeline(cfg)
    _emit(report_to_json(report), args.out)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "fit": _cmd_fit,
    "resilience": _cmd_resilience,
    "sync": _cmd_sync,
    "validate": _cmd_validate,
    "pipeline": _cmd_pipeline,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
