"""Command-line interface: evaluate, trace, optimize, verify, export.

Every subcommand is deterministic given its flags (seeds included) and
writes identical bytes on repeated runs.  Exit codes: 0 success,
1 usage or validation error, 2 I/O or numerical failure, 3 verification
failure from report-all.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .acceptance import run_all
from .curve import gamma_point, record
from .lines import min_pairwise_distance, radius_from_distance
from .scene import SceneSpec, min_surface_gap, scene_obj
from .search import (
    FreeConfig,
    chart_c6,
    chart_curve,
    chart_from_configuration,
    chart_record,
    config_lines,
    local_maximize,
    multi_start,
    objective,
    perturbation_probe,
)
from .serialize import config_from_dict, csv_line, json_dumps
from .symmetric import D3Params, build_c6, d3_orbit_check, triplets_generic
from .unlocking import alt_strategy_verdict, four_cyl_point, unlock_verdict

CURVE_HEADER = "x,phi,delta,kappa,S,T,U,F,dae_sq"
FOUR_CYL_HEADER = "T,S,U,kappa,dab_sq,dad_sq,dbd_sq,parallel_residual"


def _chart_from_source(text: str) -> FreeConfig:
    """Resolve a configuration source written as a flag value.

    Accepted forms: ``record``, ``c6`` (the untilted configuration),
    ``curve:<x>`` for a trajectory point, and ``file:<path>`` naming a
    JSON document with either ``coords`` (18 chart numbers) or ``lines``.
    """
    if text == "record":
        return chart_record()
    if text == "c6":
        return chart_c6(D3Params(0.0, 0.0, 0.0))
    if text.startswith("curve:"):
        return chart_curve(float(text[len("curve:"):]))
    if text.startswith("file:"):
        path = text[len("file:"):]
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        if isinstance(data, dict) and "coords" in data and "lines" not in data:
            return FreeConfig(np.asarray(data["coords"], dtype=float))
        return chart_from_configuration(config_from_dict(data))
    raise ValueError(
        f"unknown configuration source {text!r}; "
        "expected record, c6, curve:<x>, or file:<path>"
    )


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_eval(args: argparse.Namespace) -> int:
    angles_given = any(v is not None for v in (args.phi, args.delta, args.kappa))
    if (args.x is None) == (not angles_given):
        raise ValueError("give either --x or angle flags (--phi/--delta/--kappa)")
    if args.x is not None:
        params = gamma_point(args.x).params
    else:
        scale = math.pi / 180.0 if args.degrees else 1.0
        params = D3Params(
            scale * (args.phi or 0.0),
            scale * (args.delta or 0.0),
            scale * (args.kappa or 0.0),
        )
    config = build_c6(params)
    trip = triplets_generic(params)
    d = min_pairwise_distance(config)
    doc = {
        "params": {"phi": params.phi, "delta": params.delta, "kappa": params.kappa},
        "distances_sq": {
            "dab": trip.dab_sq,
            "dad": trip.dad_sq,
            "dbd": trip.dbd_sq,
            "dae": trip.dae_sq,
        },
        "min_distance": d,
        "radius": radius_from_distance(d),
        "d3_symmetric": d3_orbit_check(config),
    }
    _emit(json_dumps(doc))
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise ValueError("--samples must be at least 1")
    rows = [CURVE_HEADER]
    for i in range(args.samples):
        x = (i + 1) / (args.samples + 1)
        sample = gamma_point(x)
        p = sample.params
        dae_sq = triplets_generic(p).dae_sq
        rows.append(
            csv_line(
                [x, p.phi, p.delta, p.kappa, sample.S, sample.T, sample.U,
                 sample.f_value, dae_sq]
            )
        )
    _emit("\n".join(rows))
    return 0


def cmd_record(args: argparse.Namespace) -> int:
    rep = record()
    doc = {
        "computed": {
            "x": rep.x_m,
            "s": rep.s_m,
            "t": rep.t_m,
            "phi": rep.phi_m,
            "tan_kappa": rep.tan_kappa_m,
            "f": rep.f_m,
            "d": rep.d_m,
            "dae_sq": rep.dae_sq_m,
            "r": rep.r_m,
        },
        "closed_form": rep.closed,
    }
    _emit(json_dumps(doc))
    return 0


def cmd_optimize(args: argparse.Namespace) -> int:
    if args.from_source is None:
        result = multi_start(args.starts, args.seed, args.budget)
        run_doc = {"starts": args.starts, "seed": args.seed, "budget_each": args.budget}
    else:
        seed_chart = _chart_from_source(args.from_source)
        result = local_maximize(seed_chart, args.budget, rng_seed=args.seed)
        run_doc = {"from": args.from_source, "seed": args.seed, "budget": args.budget}
    doc = {
        **run_doc,
        "d_best": result.d_best,
        "r_best": result.r_best,
        "evals": result.evals,
        "trace": [[i, f] for i, f in result.trace],
        "coords": [float(c) for c in result.best.coords],
    }
    _emit(json_dumps(doc))
    return 0


def cmd_probe(args: argparse.Namespace) -> int:
    chart = _chart_from_source(args.at)
    report = perturbation_probe(chart, args.radius, args.trials, args.seed)
    _emit(json_dumps({"at": args.at, **report}))
    return 0


def cmd_unlock_check(args: argparse.Namespace) -> int:
    if (args.alpha is None) == (args.n is None):
        raise ValueError("give exactly one of --alpha or --n")
    if args.n is not None:
        if args.n < 2:
            raise ValueError("--n must be at least 2")
        alpha = math.pi / args.n
    else:
        alpha = args.alpha * (math.pi / 180.0 if args.degrees else 1.0)
    report = unlock_verdict(alpha)
    doc = {
        "alpha": alpha,
        "verdict": report.verdict,
        "witness": report.witness,
        "alternate_strategy": alt_strategy_verdict(alpha),
    }
    _emit(json_dumps(doc))
    return 0


def cmd_four_cyl(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise ValueError("--samples must be at least 2")
    if not args.t_max > 0:
        raise ValueError("--t-max must be positive")
    rows = [FOUR_CYL_HEADER]
    for T in np.linspace(0.0, args.t_max, args.samples):
        sample = four_cyl_point(float(T), mirror=args.mirror)
        rows.append(
            csv_line(
                [sample.t_var, sample.s_var, sample.u_var, sample.params.kappa,
                 *sample.dists_sq, sample.parallel_residual]
            )
        )
    _emit("\n".join(rows))
    return 0


def cmd_export_scene(args: argparse.Namespace) -> int:
    config = config_lines(_chart_from_source(args.at))
    radius = args.radius
    if radius is None:
        radius = radius_from_distance(min_pairwise_distance(config))
    spec = SceneSpec(config, radius, args.length, args.segments)
    text = scene_obj(spec)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    doc = {
        "path": args.out,
        "radius": radius,
        "segments": args.segments,
        "min_surface_gap": min_surface_gap(config, radius),
    }
    _emit(json_dumps(doc))
    return 0


def cmd_report_all(args: argparse.Namespace) -> int:
    results = run_all(inject_record_error=args.inject_record_error)
    all_passed = all(r.passed for r in results)
    if args.json:
        doc = {
            "checks": [
                {"name": r.name, "passed": r.passed, "details": r.details}
                for r in results
            ],
            "all_passed": all_passed,
        }
        _emit(json_dumps(doc))
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.details}"
            for r in results
        ]
        lines.append(
            f"{sum(r.passed for r in results)}/{len(results)} checks passed"
        )
        _emit("\n".join(lines))
    return 0 if all_passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylpack",
        description="Six equal cylinders touching the unit ball: evaluate, "
        "trace, optimize, verify, export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="distances and radius of one configuration")
    p.add_argument("--x", type=float, help="trajectory parameter in (0, 1]")
    p.add_argument("--phi", type=float, help="ring latitude")
    p.add_argument("--delta", type=float, help="tangent tilt")
    p.add_argument("--kappa", type=float, help="longitude offset")
    p.add_argument("--degrees", action="store_true", help="angles are in degrees")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("curve", help="CSV sample of the unlocking trajectory")
    p.add_argument("--samples", type=int, default=101, help="grid points in (0, 1)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("record", help="the distance-maximizing trajectory point")
    p.set_defaults(func=cmd_record)

    p = sub.add_parser("optimize", help="maximin search over free configurations")
    p.add_argument("--starts", type=int, default=32, help="multi-start count")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument(
        "--budget", type=int, default=200000, help="evaluation budget per start"
    )
    p.add_argument(
        "--from", dest="from_source", metavar="SOURCE",
        help="polish one seed instead (record, c6, curve:<x>, file:<path>)",
    )
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("probe", help="random perturbations around a configuration")
    p.add_argument(
        "--at", default="record",
        help="configuration source (record, c6, curve:<x>, file:<path>)",
    )
    p.add_argument("--radius", type=float, default=1e-3, help="perturbation box size")
    p.add_argument("--trials", type=int, default=10000, help="number of perturbations")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("unlock-check", help="can 2n cylinders start growing?")
    p.add_argument("--alpha", type=float, help="neighbor angle in (0, pi)")
    p.add_argument("--n", type=int, help="ring size n, meaning alpha = pi/n")
    p.add_argument("--degrees", action="store_true", help="--alpha is in degrees")
    p.set_defaults(func=cmd_unlock_check)

    p = sub.add_parser("four-cyl", help="CSV trace of the four-cylinder trajectory")
    p.add_argument("--t-max", type=float, default=5.0, help="largest tilt tangent")
    p.add_argument("--samples", type=int, default=100, help="grid points")
    p.add_argument("--mirror", action="store_true", help="use the mirror branch")
    p.set_defaults(func=cmd_four_cyl)

    p = sub.add_parser("export-scene", help="write an OBJ mesh of a configuration")
    p.add_argument(
        "--at", default="record",
        help="configuration source (record, c6, curve:<x>, file:<path>)",
    )
    p.add_argument(
        "--radius", type=float, default=None,
        help="cylinder radius (default: the touching radius)",
    )
    p.add_argument("--length", type=float, default=6.0, help="cylinder half-length")
    p.add_argument("--segments", type=int, default=64, help="mesh resolution")
    p.add_argument("--out", required=True, help="output path")
    p.set_defaults(func=cmd_export_scene)

    p = sub.add_parser("report-all", help="verify every headline numeric claim")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--inject-record-error", action="store_true", help=argparse.SUPPRESS
    )
    p.set_defaults(func=cmd_report_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
