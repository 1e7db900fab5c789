"""JSON and CSV forms of every externally visible object.

Conventions: rationals serialize as 'p/q' text (q omitted when 1); all big
integers serialize as decimal strings so no consumer ever truncates them to
64 bits; floats stay IEEE doubles and are tagged with the formula they came
from.  Configuration JSON round-trips losslessly.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction

from .constructions import ConfigMeta, Configuration
from .core import InputError, Line, Point, format_rational, parse_rational
from .energies import EnergyReport
from .incidence import IncidenceProfile
from .structure import ElekesReport, StructureReport


def _num(value):
    """JSON form of a numeric: exact ints/rationals as text, floats as-is."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def config_to_dict(cfg: Configuration) -> dict:
    return {
        "name": cfg.meta.name,
        "n": cfg.meta.n,
        "alpha": format_rational(cfg.meta.alpha) if cfg.meta.alpha is not None else None,
        "A": [format_rational(v) for v in cfg.sorted_A()],
        "B": [format_rational(v) for v in cfg.sorted_B()],
        "lines": [{"c": format_rational(g.c), "d": format_rational(g.d)}
                  for g in cfg.sorted_lines()],
    }


def dict_to_config(data: dict) -> Configuration:
    try:
        meta = ConfigMeta(
            data["name"], int(data["n"]),
            parse_rational(data["alpha"]) if data.get("alpha") is not None else None)
        A = frozenset(parse_rational(v) for v in data["A"])
        B = frozenset(parse_rational(v) for v in data["B"])
        lines = frozenset(Line(parse_rational(e["c"]), parse_rational(e["d"]))
                          for e in data["lines"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed configuration JSON: {exc}") from exc
    return Configuration(A, B, lines, meta)


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def save_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load_config(path) -> Configuration:
    return dict_to_config(load_json(path))


def load_lines(path) -> frozenset:
    """Line set from either a {'lines': [...]} file or a configuration file."""
    data = load_json(path)
    if "lines" not in data:
        raise InputError(f"{path} holds no 'lines' entry")
    return frozenset(Line(parse_rational(e["c"]), parse_rational(e["d"]))
                     for e in data["lines"])


def load_scalar_sets(path):
    """Scalar sets from {'elements': [...]} or {'A': [...], 'B': [...]}."""
    data = load_json(path)
    if "elements" in data:
        return (frozenset(parse_rational(v) for v in data["elements"]),)
    if "A" in data:
        sets = [frozenset(parse_rational(v) for v in data["A"])]
        if "B" in data:
            sets.append(frozenset(parse_rational(v) for v in data["B"]))
        return tuple(sets)
    raise InputError(f"{path} holds neither 'elements' nor 'A'/'B'")


def load_points(path):
    data = load_json(path)
    if "points" not in data:
        raise InputError(f"{path} holds no 'points' entry")
    return [Point(parse_rational(str(x)), parse_rational(str(y)))
            for x, y in data["points"]]


def energy_report_to_dict(report: EnergyReport) -> dict:
    return {
        "kind": report.kind,
        "value": str(report.value),
        "support": report.support,
        "bounds": [{"label": lab, "value": _num(val)}
                   for lab, val in report.bounds],
    }


def profile_to_csv(profile: IncidenceProfile, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["line_c", "line_d", "count"])
        for g, count in profile.per_line:
            writer.writerow([format_rational(g.c), format_rational(g.d), count])


def rich_report_to_csv(report, path) -> None:
    from .incidence import VerticalLine

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kind", "c_or_x", "d", "count"])
        for entry, count in report.entries:
            if isinstance(entry, VerticalLine):
                writer.writerow(["vertical", format_rational(entry.x), "", count])
            else:
                writer.writerow(["line", format_rational(entry.c),
                                 format_rational(entry.d), count])


def _selected_to_list(selected):
    return [{"slope": format_rational(f.slope), "size": f.size,
             "incidences": f.incidences,
             "intercept_energy": str(f.intercept_energy)}
            for f in selected]


def structure_report_to_dict(report: StructureReport) -> dict:
    inv = report.inventory
    return {
        "n": report.n,
        "alpha": format_rational(report.alpha) if report.alpha is not None else None,
        "band": [str(b) for b in report.band],
        "branch": report.branch,
        "degenerate": report.degenerate,
        "beta": report.beta,
        "gamma": report.gamma,
        "t": str(report.t) if report.t is not None else None,
        "families_used": report.families_used,
        "selected": _selected_to_list(report.selected),
        "slopes": [format_rational(s) for s in report.slopes],
        "mult_energy_slopes": _num(report.mult_energy_slopes),
        "product": _num(report.product),
        "references": [
            {"formula": "n^(3-alpha)", "value": report.ref_power},
            {"formula": "n^(3-alpha)/ln(n)^12", "value": report.ref_power_over_log12},
        ],
        "parallel_inventory": [{"slope": format_rational(s), "size": len(ls)}
                               for s, ls in inv.parallel],
        "concurrent_inventory": [
            {"point": [format_rational(p.x), format_rational(p.y)], "size": len(ls)}
            for p, ls in inv.concurrent],
        "leftover_lines": len(inv.leftovers),
        "log_base": report.log_base,
    }


def elekes_report_to_dict(report: ElekesReport) -> dict:
    return {
        "n": report.n,
        "alpha_rich": format_rational(report.alpha_rich),
        "k": report.k,
        "degenerate": report.degenerate,
        "beta": report.beta,
        "t": str(report.t) if report.t is not None else None,
        "families_used": report.families_used,
        "selected": _selected_to_list(report.selected),
        "slopes": [format_rational(s) for s in report.slopes],
        "mult_energy_slopes": _num(report.mult_energy_slopes),
        "references": [
            {"formula": "n^(1/4) t^(1/4) Ex(S)^(1/4) ln(n)^3 / alpha^(3/2)",
             "value": report.rhs_bound},
        ],
        "log_base": report.log_base,
    }


def write_sweep_csv(rows, path) -> None:
    """Long-format sweep rows (construction, n, alpha, metric, value)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["construction", "n", "alpha", "metric", "value"])
        for row in rows:
            writer.writerow(row)
