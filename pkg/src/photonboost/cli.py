"""Command-line driver.

Subcommands:

* ``single``    one (alpha, sigma_theta, xi) evaluation, prints the log
                negativity;
* ``sweep``     rapidity sweep from a JSON config and/or flags, CSV out;
* ``fig2``      preset direction sweep (five boost angles, sigma = 1.0);
* ``fig3``      preset spread sweep (four spreads, alpha = 2*pi/5);
* ``validate``  invariant self-checks, JSON report.

Exit codes: 0 success, 1 invalid configuration, 2 validation failure,
3 numerical convergence failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import validation
from .beams import BeamSpec, build_grid, reduced_density
from .entanglement import log_negativity
from .sweep import (
    ConfigError,
    FIG2_ALPHAS,
    FIG3_SIGMAS,
    QuadratureConvergenceWarning,
    SweepConfig,
    gnuplot_script,
    make_boost,
    preset_fig2,
    preset_fig3,
    rows_to_csv,
    run_sweep,
    write_csv,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-theta", type=int, default=None, help="polar quadrature nodes")
    parser.add_argument("--n-phi", type=int, default=None, help="azimuthal quadrature nodes")
    parser.add_argument("--p0", type=float, default=None, help="shell momentum magnitude")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonboost",
        description="Boost polarization-entangled photon beams and track their log negativity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_single = sub.add_parser("single", help="evaluate one parameter point")
    p_single.add_argument("--alpha", type=float, required=True, help="boost polar angle (rad)")
    p_single.add_argument("--sigma-theta", type=float, required=True, help="beam angular spread")
    p_single.add_argument("--xi", type=float, required=True, help="boost rapidity")
    _add_grid_flags(p_single)

    p_sweep = sub.add_parser("sweep", help="rapidity sweep to CSV")
    p_sweep.add_argument("--config", help="JSON config file (flags override its fields)")
    p_sweep.add_argument("--alpha", type=float, default=None)
    p_sweep.add_argument("--sigma-theta", type=float, default=None)
    p_sweep.add_argument("--xi-min", type=float, default=None)
    p_sweep.add_argument("--xi-max", type=float, default=None)
    p_sweep.add_argument("--xi-steps", type=int, default=None)
    _add_grid_flags(p_sweep)
    p_sweep.add_argument("--out", default=None, help="CSV path (default: config output_path or stdout)")
    p_sweep.add_argument("--timing", action="store_true", help="append the wall_time_ms column")
    p_sweep.add_argument(
        "--check-convergence",
        action="store_true",
        help="re-evaluate sample points on a doubled grid; exit 3 if they move",
    )
    p_sweep.add_argument("--plot-script", default=None, help="also write a gnuplot script here")

    for name, helptext in (("fig2", "direction-sweep preset"), ("fig3", "spread-sweep preset")):
        p_fig = sub.add_parser(name, help=helptext)
        p_fig.add_argument("--out", default=f"{name}.csv", help="combined CSV path")
        p_fig.add_argument("--timing", action="store_true", help="append the wall_time_ms column")
        p_fig.add_argument("--plot-script", default=None, help="also write a gnuplot script here")

    p_val = sub.add_parser("validate", help="run the invariant self-checks")
    p_val.add_argument("--seed", type=int, default=validation.DEFAULT_SEED)

    return parser


_FLAG_FIELDS = ("alpha", "sigma_theta", "xi_min", "xi_max", "xi_steps", "n_theta", "n_phi", "p0")


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    raw: dict = {}
    if args.config:
        cfg = SweepConfig.from_json(args.config)
        raw = {f: getattr(cfg, f) for f in _FLAG_FIELDS}
        raw["output_path"] = cfg.output_path
    overrides = {f: getattr(args, f) for f in _FLAG_FIELDS if getattr(args, f) is not None}
    raw.update(overrides)
    if args.out is not None:
        raw["output_path"] = args.out
    return SweepConfig.from_mapping(raw)


def _emit_rows(rows, path: str | None, include_timing: bool) -> None:
    if path:
        write_csv(rows, path, include_timing=include_timing)
    else:
        sys.stdout.write(rows_to_csv(rows, include_timing=include_timing))


def _cmd_single(args: argparse.Namespace) -> int:
    spec = BeamSpec(args.sigma_theta, args.p0 if args.p0 is not None else 1.0)
    grid = build_grid(spec, args.n_theta or 64, args.n_phi or 64)
    rho = reduced_density(make_boost(args.alpha, args.xi), grid, spec)
    print(f"{log_negativity(rho):.9g}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args)
    status = EXIT_OK
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", QuadratureConvergenceWarning)
        rows = run_sweep(cfg, check_convergence=args.check_convergence)
        for w in caught:
            if issubclass(w.category, QuadratureConvergenceWarning):
                print(f"warning: {w.message}", file=sys.stderr)
                status = EXIT_CONVERGENCE
    _emit_rows(rows, cfg.output_path, args.timing)
    if args.plot_script:
        with open(args.plot_script, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(gnuplot_script(cfg.output_path or "-", "alpha", (cfg.alpha,)))
    return status


def _cmd_fig(args: argparse.Namespace, configs, curve_key: str, curve_values) -> int:
    rows = []
    for cfg in configs:
        rows.extend(run_sweep(cfg))
    _emit_rows(rows, args.out, args.timing)
    if args.plot_script:
        with open(args.plot_script, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(gnuplot_script(args.out, curve_key, tuple(curve_values)))
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    report = validation.validate(seed=args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_VALIDATION


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "single":
            return _cmd_single(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "fig2":
            return _cmd_fig(args, preset_fig2(), "alpha", FIG2_ALPHAS)
        if args.command == "fig3":
            return _cmd_fig(args, preset_fig3(), "sigma_theta", FIG3_SIGMAS)
        if args.command == "validate":
            return _cmd_validate(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except np.linalg.LinAlgError as exc:
        # LinAlgError subclasses ValueError, so it must be caught first
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
