"""Command-line front end.

Subcommands: gen, inc, energy, rich, structure, sweep, verify.
Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio
from .constructions import build_configuration
from .core import CapExceededError, DomainError, InputError, parse_rational
from .energies import (additive_energy, bipartite_additive_energy,
                       line_energy, multiplicative_energy)
from .incidence import count_incidences_product, enumerate_rich_lines
from .structure import structure_report
from .sweep import SweepSpec, run_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inclab",
        description="Exact incidence and energy computations on lattice "
                    "point-line configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a configuration JSON file")
    gen.add_argument("--construction", required=True,
                     choices=["family", "elekes", "geometric"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--alpha", help="exact fraction P/Q (family only)")
    gen.add_argument("-o", "--out", required=True)

    inc = sub.add_parser("inc", help="incidence profile of a configuration")
    inc.add_argument("config")
    inc.add_argument("-o", "--out", help="per-line CSV output path")
    inc.add_argument("--summary", help="summary JSON output path")
    inc.add_argument("--threads", type=int)

    energy = sub.add_parser("energy", help="energy report as JSON")
    energy.add_argument("input", nargs="?",
                        help="configuration file (A/B/lines chosen by kind)")
    energy.add_argument("--kind", required=True,
                        choices=["additive", "multiplicative", "bipartite", "line"])
    energy.add_argument("--set", dest="set_file",
                        help="scalar-set JSON: {'elements': [...]} or {'A':..,'B':..}")
    energy.add_argument("--lines", dest="lines_file",
                        help="line-set JSON: {'lines': [{'c','d'}, ...]}")
    energy.add_argument("-o", "--out")
    energy.add_argument("--threads", type=int)

    rich = sub.add_parser("rich", help="enumerate r-rich lines of a point set")
    rich.add_argument("points", help="points JSON: {'points': [[x, y], ...]}")
    rich.add_argument("--r", type=int, required=True)
    rich.add_argument("-o", "--out", help="CSV output path")

    struct = sub.add_parser("structure", help="structure report as JSON")
    struct.add_argument("config")
    struct.add_argument("--min-size", type=int, default=2)
    struct.add_argument("--band", help="richness band LO:HI")
    struct.add_argument("-o", "--out")
    struct.add_argument("--threads", type=int)

    sweep = sub.add_parser("sweep", help="run a sweep spec, emit long CSV + fits")
    sweep.add_argument("spec", help="SweepSpec JSON file")
    sweep.add_argument("-o", "--out", required=True, help="long-format CSV path")
    sweep.add_argument("--fits", help="optional exponent-fit JSON path")
    sweep.add_argument("--threads", type=int)

    verify = sub.add_parser("verify", help="run the acceptance suite")
    verify.add_argument("--only", help="comma-separated criterion numbers")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--threads", type=int)

    return parser


def _cmd_gen(args) -> int:
    alpha = parse_rational(args.alpha) if args.alpha else None
    cfg = build_configuration(args.construction, args.n, alpha)
    fileio.save_json(fileio.config_to_dict(cfg), args.out)
    print(f"wrote {args.out}: |A|={len(cfg.A)} |B|={len(cfg.B)} "
          f"|lines|={len(cfg.lines)}")
    return 0


def _cmd_inc(args) -> int:
    cfg = fileio.load_config(args.config)
    profile = count_incidences_product(cfg.A, cfg.B, cfg.lines, args.threads)
    summary = profile.summary()
    print(f"total {summary['total']} (min {summary['min']}, "
          f"max {summary['max']}, median {summary['median']})")
    if args.out:
        fileio.profile_to_csv(profile, args.out)
    if args.summary:
        fileio.save_json(summary, args.summary)
    return 0


def _cmd_energy(args) -> int:
    kind = args.kind
    if kind == "line":
        path = args.lines_file or args.input
        if path is None:
            raise InputError("line energy needs --lines FILE or a config file")
        lines = fileio.load_lines(path)
        report = line_energy(lines, args.threads)
    else:
        if args.set_file:
            sets = fileio.load_scalar_sets(args.set_file)
        elif args.input:
            cfg = fileio.load_config(args.input)
            sets = (cfg.A, cfg.B)
        else:
            raise InputError(f"{kind} energy needs --set FILE or a config file")
        if kind == "additive":
            report = additive_energy(sets[0], args.threads)
        elif kind == "multiplicative":
            report = multiplicative_energy(sets[0], args.threads)
        else:
            if len(sets) < 2:
                raise InputError("bipartite energy needs two sets (A and B)")
            report = bipartite_additive_energy(sets[0], sets[1], args.threads)
    payload = fileio.energy_report_to_dict(report)
    print(f"{report.kind} energy {report.value} (support {report.support})")
    if args.out:
        fileio.save_json(payload, args.out)
    return 0


def _cmd_rich(args) -> int:
    points = fileio.load_points(args.points)
    report = enumerate_rich_lines(points, args.r)
    print(f"{len(report.entries)} lines with >= {args.r} of {report.point_count} "
          f"points (reference m^2/r^3 + m/r = {report.st_reference:.3f})")
    if args.out:
        fileio.rich_report_to_csv(report, args.out)
    return 0


def _parse_band(text):
    try:
        lo, hi = text.split(":")
        return (int(lo), int(hi))
    except ValueError as exc:
        raise InputError(f"band must be LO:HI, got {text!r}") from exc


def _cmd_structure(args) -> int:
    cfg = fileio.load_config(args.config)
    band = _parse_band(args.band) if args.band else None
    report = structure_report(cfg, min_size=args.min_size, band=band,
                              threads=args.threads)
    payload = fileio.structure_report_to_dict(report)
    print(json.dumps(payload, indent=2))
    if args.out:
        fileio.save_json(payload, args.out)
    return 0


def _cmd_sweep(args) -> int:
    spec = SweepSpec.from_dict(fileio.load_json(args.spec))
    rows, fits = run_sweep(spec, args.threads)
    fileio.write_sweep_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    fit_payload = {}
    for metric, fit in sorted(fits.items()):
        print(f"fit {metric}: exponent {fit.slope:.4f} "
              f"(intercept {fit.intercept:.3f}, residual {fit.residual:.3e})")
        fit_payload[metric] = {"slope": fit.slope, "intercept": fit.intercept,
                               "residual": fit.residual}
    if args.fits:
        fileio.save_json(fit_payload, args.fits)
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_all

    only = None
    if args.only:
        try:
            only = {int(tok) for tok in args.only.split(",")}
        except ValueError as exc:
            raise InputError(f"--only takes criterion numbers: {exc}") from exc
    _, ok = run_all(only=only, seed=args.seed, threads=args.threads)
    return 0 if ok else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "inc": _cmd_inc,
    "energy": _cmd_energy,
    "rich": _cmd_rich,
    "structure": _cmd_structure,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (InputError, DomainError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
