"""Parameter sweeps over constructions and log-log exponent estimation."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructions import build_configuration, slope_set
from .core import InputError
from .energies import line_energy, multiplicative_energy
from .incidence import count_incidences_product
from .structure import structure_report

# line_energy enumerates |L|^2 ordered pairs; sweeps skip beyond this.
SWEEP_PAIR_CAP = 1 << 31

MEASUREMENTS = ("incidences", "line_energy", "slope_energy", "structure")


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    residual: float  # sum of squared log-scale residuals


def exponent_fit(points) -> ExponentFit:
    """Least squares slope of ln(value) against ln(n).

    Estimates e in value ~ n^e; needs at least 3 points, all positive.
    """
    pts = [(float(n), float(v)) for n, v in points]
    if len(pts) < 3:
        raise InputError("exponent fit needs at least 3 points")
    if any(n <= 0 or v <= 0 for n, v in pts):
        raise InputError("exponent fit needs positive coordinates")
    xs = [math.log(n) for n, _ in pts]
    ys = [math.log(v) for _, v in pts]
    k = len(pts)
    mx = sum(xs) / k
    my = sum(ys) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    residual = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return ExponentFit(slope, intercept, residual)


@dataclass(frozen=True)
class SweepSpec:
    construction: str
    n_values: tuple
    alpha: Optional[Fraction]
    measurements: tuple

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSpec":
        try:
            construction = data["construction"]
            n_values = tuple(int(n) for n in data["n_values"])
            alpha = data.get("alpha")
            measurements = tuple(data.get("measurements", MEASUREMENTS))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed sweep spec: {exc}") from exc
        if construction not in ("family", "elekes", "geometric"):
            raise InputError(f"unknown construction {construction!r}")
        if any(b <= a for a, b in zip(n_values, n_values[1:])) or not n_values:
            raise InputError("n_values must be nonempty and strictly increasing")
        if (construction == "family") != (alpha is not None):
            raise InputError("alpha is required exactly when construction=family")
        for m in measurements:
            if m not in MEASUREMENTS:
                raise InputError(f"unknown measurement {m!r}")
        from .core import parse_rational
        return cls(construction, n_values,
                   parse_rational(alpha) if alpha is not None else None,
                   measurements)


def _measure(cfg, measurement, threads):
    if measurement == "incidences":
        total = count_incidences_product(cfg.A, cfg.B, cfg.lines, threads).total
        return [("incidences", total)]
    if measurement == "line_energy":
        if len(cfg.lines) ** 2 > SWEEP_PAIR_CAP:
            print(f"sweep: skipping line_energy at n={cfg.meta.n}: "
                  f"{len(cfg.lines)}^2 pairs exceed cap", file=sys.stderr)
            return [("line_energy", None)]
        return [("line_energy", line_energy(cfg.lines, threads).value)]
    if measurement == "slope_energy":
        slopes = slope_set(cfg.lines)
        if not slopes:
            return [("slope_energy", None)]
        return [("slope_energy", multiplicative_energy(slopes, threads).value)]
    report = structure_report(cfg, threads=threads)
    if report.degenerate:
        return [("structure_beta", None), ("structure_t", None),
                ("structure_mult_energy_S", None), ("structure_product", None)]
    return [("structure_beta", report.beta), ("structure_t", report.t),
            ("structure_mult_energy_S", report.mult_energy_slopes),
            ("structure_product", report.product)]


def run_sweep(spec: SweepSpec, threads=None):
    """Evaluate each measurement on each n; returns (rows, fits).

    Rows are long-format (construction, n, alpha, metric, value); fits map
    metric -> ExponentFit over the rows with positive values (when at least
    3 such rows exist).
    """
    from .core import format_rational

    alpha_txt = format_rational(spec.alpha) if spec.alpha is not None else ""
    rows = []
    series: dict = {}
    for n in spec.n_values:
        cfg = build_configuration(spec.construction, n, spec.alpha)
        for measurement in spec.measurements:
            for metric, value in _measure(cfg, measurement, threads):
                rows.append((spec.construction, n, alpha_txt, metric,
                             "" if value is None else value))
                if value is not None and float(value) > 0:
                    series.setdefault(metric, []).append((n, value))
    fits = {metric: exponent_fit(pts)
            for metric, pts in series.items() if len(pts) >= 3}
    return rows, fits
