"""Command-line entry point.

Subcommands: sample-eigs | analytic-cdf | exact-sample | verify |
series-check.  Parameters come from an optional JSON config file
(--config) with flag overrides winning; HAARPROD_OUT sets the default
output directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .config import ConfigError
from .pipeline import (
    MODES,
    ExperimentConfig,
    run_analytic_cdf,
    run_exact_sample,
    run_sample_eigs,
    run_series_check,
    write_verify,
)
from .spectra import EigensolverError, RadiusOverflowError

DEFAULT_OUT_NAME = {
    "sample-eigs": "eigs.csv",
    "analytic-cdf": "cdf.csv",
    "exact-sample": "exact_sample.csv",
    "verify": "verify_report.json",
    "series-check": "series_check.csv",
}


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"dims must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haarprod",
        description="Limit law and Monte-Carlo spectra of products of "
        "truncated Haar unitary matrices",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in MODES:
        p = sub.add_parser(mode)
        p.add_argument("--config", type=Path, help="JSON config file")
        p.add_argument("--n", type=int, help="ambient dimension")
        p.add_argument("--dims", type=str, help="comma-separated block sizes n1..nk+1")
        p.add_argument("--trials", type=int, help="number of independent trials")
        p.add_argument("--seed", type=int, help="master seed")
        p.add_argument("--delta", type=float, help="KS confidence parameter")
        p.add_argument("--grid", type=int, help="grid points for analytic-cdf")
        p.add_argument("--out", type=Path, help="output file path")
    return parser


def load_config(args) -> ExperimentConfig:
    fields = {}
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        for key in ("n", "dims", "trials", "master_seed", "delta",
                    "grid_points", "series_order", "moment_pmax"):
            if key in raw:
                fields[key] = raw[key]
        unknown = set(raw) - set(fields)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if args.n is not None:
        fields["n"] = args.n
    if args.dims is not None:
        fields["dims"] = _parse_dims(args.dims)
    if args.trials is not None:
        fields["trials"] = args.trials
    if args.seed is not None:
        fields["master_seed"] = args.seed
    if args.delta is not None:
        fields["delta"] = args.delta
    if args.grid is not None:
        fields["grid_points"] = args.grid
    if "n" not in fields:
        raise ConfigError("n is required (flag --n or config file)")
    if "dims" not in fields:
        raise ConfigError("dims is required (flag --dims or config file)")
    fields["dims"] = tuple(fields["dims"])
    return ExperimentConfig(**fields)


def resolve_out(args) -> Path:
    if args.out is not None:
        return args.out
    base = Path(os.environ.get("HAARPROD_OUT", "."))
    return base / DEFAULT_OUT_NAME[args.mode]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        out = resolve_out(args)
        out.parent.mkdir(parents=True, exist_ok=True)
        if args.mode == "sample-eigs":
            run_sample_eigs(cfg, out)
        elif args.mode == "analytic-cdf":
            run_analytic_cdf(cfg, out)
        elif args.mode == "exact-sample":
            run_exact_sample(cfg, out)
        elif args.mode == "verify":
            write_verify(cfg, out)
        elif args.mode == "series-check":
            run_series_check(cfg, out)
    except ConfigError as exc:
        print(f"haarprod: config error: {exc}", file=sys.stderr)
        return 2
    except (EigensolverError, RadiusOverflowError) as exc:
        print(f"haarprod: numerical failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
