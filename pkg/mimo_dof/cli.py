#!/usr/bin/env python3
"""
Command-line front end for DoF regions and their Monte Carlo checks.

Commands:
  region      exact DoF region and the earlier outer bound (JSON + boundary CSV)
  sweep       ergodic single-user / MAC rates over an SNR grid (CSV or JSON)
  achievable  finite-SNR achievable hull vertices and corner slopes
  verify      run verification suites; exit status 1 if any check fails
  slope       DoF slopes from a sweep CSV (or from an internal sweep)

Usage:
  mimo-dof region --antennas 1,2,3,4 --out outputs/region_1234.json
  mimo-dof sweep --antennas 2,3,2,3 --law rayleigh --snr-db 30:5:40 --trials 10000 --out outputs/sweep.csv
  mimo-dof slope --in outputs/sweep.csv
  mimo-dof verify --suite lemma3 --trials 1000 --seed 7

Flags may also come from ``--config FILE`` (key=value lines); flags on the command line win.
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.
"""
import argparse
import logging
import os
import sys

import numpy as np

from . import __version__, capacity, region
from .data import ResultRepository, provenance, read_config
from .models import AntennaConfig, FadingLaw
from .randmat import RngStream
from .verify import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
DEFAULT_SNR_DB = "30:5:40"
SWEEP_QUANTITIES = ("r1", "r2", "sum")


# -- argument types --------------------------------------------------------------------

def antennas_type(text):
    try:
        return AntennaConfig.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def law_type(text):
    try:
        FadingLaw.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    return str(text).strip()


def snr_grid_type(text):
    """``lo:step:hi`` (inclusive) or a comma list of dB values, strictly increasing."""
    text = str(text).strip()
    try:
        if ":" in text:
            lo, step, hi = (float(v) for v in text.split(":"))
            if step <= 0:
                raise argparse.ArgumentTypeError(f"SNR step must be positive in {text!r}")
            n = int(np.floor((hi - lo) / step + 1e-9)) + 1
            grid = [round(lo + i * step, 10) for i in range(max(n, 0))]
        else:
            grid = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed SNR grid {text!r}")
    if not grid:
        raise argparse.ArgumentTypeError(f"empty SNR grid {text!r}")
    if any(b <= a for a, b in zip(grid[:-1], grid[1:])):
        raise argparse.ArgumentTypeError(f"SNR grid must be strictly increasing: {text!r}")
    return tuple(grid)


def _bounded_int(lo, name):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < lo:
            raise argparse.ArgumentTypeError(f"{name} must be >= {lo}, got {value}")
        return value
    return parse


# -- parser ----------------------------------------------------------------------------

def _common_parser():
    ap = argparse.ArgumentParser(add_help=False)
    ap.add_argument("--config", help="key=value file with default flag values")
    ap.add_argument("--antennas", type=antennas_type, help="M1,N1,M2,N2")
    ap.add_argument("--law", type=law_type, default=None,
                    help="rayleigh | fixed:<singular values> | scrambled:<column gains>")
    ap.add_argument("--snr-db", dest="snr_db", type=snr_grid_type, default=None,
                    help="SNR grid in dB, lo:step:hi or comma list")
    ap.add_argument("--coherence-t", dest="coherence_t", type=_bounded_int(1, "coherence time"), default=1)
    ap.add_argument("--trials", type=_bounded_int(1, "trials"), default=None)
    ap.add_argument("--seed", type=_bounded_int(0, "seed"), default=0)
    ap.add_argument("--workers", type=_bounded_int(1, "workers"), default=None)
    ap.add_argument("--out", help="output file")
    ap.add_argument("--format", choices=("json", "csv"), default=None)
    ap.add_argument("-v", "--verbose", action="count", default=0)
    return ap


def build_parser(defaults=None):
    """Main parser; ``defaults`` (e.g. from a config file) apply to every command."""
    common = _common_parser()
    ap = argparse.ArgumentParser(prog="mimo-dof", description="DoF regions of two-user MIMO interference channels")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    commands = {
        "region": sub.add_parser("region", parents=[common], help="exact DoF region"),
        "sweep": sub.add_parser("sweep", parents=[common], help="ergodic rates over an SNR grid"),
        "achievable": sub.add_parser("achievable", parents=[common], help="finite-SNR achievable hull"),
        "verify": sub.add_parser("verify", parents=[common], help="run verification suites"),
        "slope": sub.add_parser("slope", parents=[common], help="DoF slopes of a sweep"),
    }
    commands["verify"].add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    commands["slope"].add_argument("--in", dest="input", help="sweep CSV written by the sweep command")
    if defaults:
        for p in commands.values():
            p.set_defaults(**defaults)
    return ap


CONFIG_KEYS = ("antennas", "law", "snr_db", "coherence_t", "trials", "seed", "workers", "out", "format",
               "suite", "input")


def parse_args(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    defaults = None
    if known.config:
        try:
            defaults = read_config(known.config)
        except (OSError, ValueError) as e:
            build_parser().error(str(e))
        unknown = sorted(set(defaults) - set(CONFIG_KEYS))
        if unknown:
            build_parser().error(f"unknown keys in {known.config}: {', '.join(unknown)}")
    return build_parser(defaults).parse_args(argv)


def _law(args):
    return FadingLaw.parse(args.law or "rayleigh", args.coherence_t)


def _snr_db(args):
    return args.snr_db if args.snr_db is not None else snr_grid_type(DEFAULT_SNR_DB)


def _require_antennas(args):
    if args.antennas is None:
        raise argparse.ArgumentTypeError("--antennas is required for this command")
    return args.antennas


def _trials(args, default=10_000):
    return args.trials or default


def _out(args, default):
    return args.out or default


# -- commands --------------------------------------------------------------------------

def cmd_region(args, repo):
    cfg = _require_antennas(args)
    exact = region.compute_region(cfg)
    outer = region.previous_outer_bound(cfg)
    payload = {
        "exact": exact.to_dict(),
        "previous_outer_bound": outer.to_dict(),
        "contains_origin": region.contains(exact, (0.0, 0.0)),
        "provenance": provenance(),
    }
    out = _out(args, "region.json")
    p = repo.write_json(out, payload)
    print("Wrote", p)
    rows = [("exact", d1, d2, __version__) for d1, d2 in region.boundary_polyline(exact)]
    rows += [("previous_outer_bound", d1, d2, __version__) for d1, d2 in region.boundary_polyline(outer)]
    p = repo.write_csv(os.path.splitext(out)[0] + "_boundary.csv", ["region", "d1", "d2", "tool_version"],
                       [(name, float(d1), float(d2), v) for name, d1, d2, v in rows])
    print("Wrote", p)
    print(f"case {exact.case_label}, L={exact.l_value}, mu={exact.tradeoff_slope}, "
          f"vertices={[tuple(v) for v in exact.vertices]}")
    return EXIT_OK


def _sweep_records(args):
    cfg = _require_antennas(args)
    law = _law(args)
    gammas = capacity.db_to_linear(_snr_db(args))
    trials = _trials(args)
    bounds = capacity.mac_bounds(RngStream(args.seed).child("sweep"), cfg, law, gammas,
                                 trials=trials, workers=args.workers)
    records = []
    for j, db in enumerate(_snr_db(args)):
        for r in (1, 2):
            mb = bounds[r][j]
            for q in SWEEP_QUANTITIES:
                records.append((db, f"mac{r}_{q}", getattr(mb, q)))
    return records, trials


def cmd_sweep(args, repo):
    records, trials = _sweep_records(args)
    fmt = args.format or "csv"
    out = _out(args, f"sweep.{fmt}")
    if fmt == "csv":
        p = repo.write_sweep(out, records, args.seed, trials)
    else:
        p = repo.write_json(out, {
            "config": list(args.antennas.as_tuple()),
            "law": _law(args).describe(),
            "coherence_t": args.coherence_t,
            "rows": [{"gamma_db": db, "quantity": q, "mean_bits": e.mean, "std_err": e.std_err,
                      "trials": e.trials} for db, q, e in records],
            "provenance": provenance(args.seed, trials),
        })
    print("Wrote", p)
    return EXIT_OK


def cmd_achievable(args, repo):
    cfg = _require_antennas(args)
    law = _law(args)
    gammas = capacity.db_to_linear(_snr_db(args))
    trials = _trials(args)
    bounds = capacity.mac_bounds(RngStream(args.seed).child("achievable"), cfg, law, gammas,
                                 trials=trials, workers=args.workers)
    hulls = [capacity.achievable_hull(m1, m2) for m1, m2 in zip(bounds[1], bounds[2])]
    fmt = args.format or "json"
    out = _out(args, f"achievable.{fmt}")
    if fmt == "csv":
        rows = [(db, p.r1, p.r2, args.seed, trials, __version__)
                for db, hull in zip(_snr_db(args), hulls) for p in hull]
        p = repo.write_csv(out, ["gamma_db", "r1", "r2", "seed", "trials", "tool_version"], rows)
    else:
        payload = {
            "config": list(cfg.as_tuple()),
            "law": law.describe(),
            "points": [{"gamma_db": db, "vertices": [[p.r1, p.r2] for p in hull]}
                       for db, hull in zip(_snr_db(args), hulls)],
            "provenance": provenance(args.seed, trials),
        }
        if len(gammas) > 1:
            corners = capacity.corners_from_bounds(bounds)
            payload["corner_slopes"] = {k: list(v) for k, v in capacity.corner_slopes(gammas, corners).items()}
        p = repo.write_json(out, payload)
    print("Wrote", p)
    return EXIT_OK


def cmd_verify(args, repo):
    gammas = None if args.snr_db is None else tuple(capacity.db_to_linear(args.snr_db))
    law = _law(args) if args.law or args.coherence_t != 1 else None
    reports = run_suite(args.suite, args.seed, args.trials, args.antennas, law, gammas, args.workers)
    if not isinstance(reports, list):
        reports = [reports]
    for rep in reports:
        n_ok, n_all, failures = rep.summary()
        print(f"{rep.suite_name}: {n_ok}/{n_all} checks passed")
        for f in failures:
            print("  FAILED:", f)
    passed = all(r.passed for r in reports)
    out = _out(args, "verify.json")
    p = repo.write_json(out, {
        "suite": args.suite,
        "passed": passed,
        "reports": [r.to_dict() for r in reports],
        "provenance": provenance(args.seed, args.trials),
    })
    print("Wrote", p)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_slope(args, repo):
    if args.input:
        curves = repo.load_sweep(args.input)
        trials = None
    else:
        records, trials = _sweep_records(args)
        curves = {}
        for db, q, e in records:
            curves.setdefault(q, []).append((db, e.mean))
    slopes = {}
    for q, pts in curves.items():
        slopes[q] = capacity.dof_slope([(float(capacity.db_to_linear(db)), r) for db, r in pts])
        print(f"{q}: {slopes[q]:.4f}")
    if args.out:
        if (args.format or "json") == "csv":
            p = repo.write_csv(args.out, ["quantity", "slope", "tool_version"],
                               [(q, s, __version__) for q, s in slopes.items()])
        else:
            p = repo.write_json(args.out, {"slopes": slopes, "source": args.input,
                                           "provenance": provenance(args.seed, trials)})
        print("Wrote", p)
    return EXIT_OK


COMMANDS = {
    "region": cmd_region,
    "sweep": cmd_sweep,
    "achievable": cmd_achievable,
    "verify": cmd_verify,
    "slope": cmd_slope,
}


def main(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, ResultRepository())
    except (argparse.ArgumentTypeError, ValueError, KeyError) as e:
        print(f"mimo-dof {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"mimo-dof {args.command}: I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
