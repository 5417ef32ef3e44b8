"""Sweeps over the dimensionless time with CSV and SVG emission.

The CSV schema is fixed: header "tau_bar,g0,g2,gm2,j2,concurrence,discord",
one row per uniformly spaced tau_bar, unrequested columns left empty.
Floats are written with repr, i.e. the shortest decimal that round-trips,
so identical configurations produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coherence import analytic_intensities
from .dimer import DimerParams, evolve_analytic
from .discord import discord
from .entanglement import concurrence_analytic
from .errors import InvalidConfig, InvalidParams

CSV_COLUMNS = ("tau_bar", "g0", "g2", "gm2", "j2", "concurrence", "discord")
CSV_HEADER = ",".join(CSV_COLUMNS)
QUANTITIES = ("g0", "j2", "concurrence", "discord")
MAX_POINTS = 10**6

_SVG_COLORS = {
    "g0": "#1f77b4",
    "j2": "#d62728",
    "concurrence": "#2ca02c",
    "discord": "#9467bd",
}


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: physical parameters, tau_bar range, requested quantities, output."""

    alpha: complex = 1.0 + 0j
    beta: complex = 0j
    b: float = 10.0
    tau_bar_start: float = 0.0
    tau_bar_end: float = math.pi
    points: int = 201
    quantities: tuple[str, ...] = ("g0", "j2", "concurrence")
    measured_subsystem: int = 2
    output_path: str = "sweep.csv"
    format: str = "csv"
    renormalize: bool = False

    def check(self) -> None:
        if not isinstance(self.points, int) or self.points < 2:
            raise InvalidConfig(f"points must be an integer >= 2, got {self.points!r}")
        if self.points > MAX_POINTS:
            raise InvalidConfig(f"points must be <= {MAX_POINTS}, got {self.points}")
        if not (math.isfinite(self.tau_bar_start) and math.isfinite(self.tau_bar_end)):
            raise InvalidConfig("tau_bar range must be finite")
        if not self.tau_bar_end > self.tau_bar_start:
            raise InvalidConfig(
                f"degenerate range: tau_bar_end {self.tau_bar_end!r} must exceed "
                f"tau_bar_start {self.tau_bar_start!r}"
            )
        if not self.quantities:
            raise InvalidConfig("at least one quantity must be requested")
        unknown = [q for q in self.quantities if q not in QUANTITIES]
        if unknown:
            raise InvalidConfig(f"unknown quantities {unknown}; choose from {QUANTITIES}")
        if self.measured_subsystem not in (1, 2):
            raise InvalidConfig(f"measured subsystem must be 1 or 2, got {self.measured_subsystem!r}")
        if self.format not in ("csv", "svg", "both"):
            raise InvalidConfig(f"format must be csv, svg, or both, got {self.format!r}")

    def params(self) -> DimerParams:
        try:
            if self.renormalize:
                return DimerParams.normalized(self.alpha, self.beta, self.b)
            return DimerParams(self.alpha, self.beta, self.b)
        except InvalidParams as exc:
            raise InvalidConfig(str(exc)) from exc


def _format_value(x: float) -> str:
    return repr(float(x))


def run_sweep(cfg: SweepConfig) -> list[Path]:
    """Compute the requested columns and write CSV and/or SVG; returns paths."""
    cfg.check()
    p = cfg.params()
    taus = np.linspace(cfg.tau_bar_start, cfg.tau_bar_end, cfg.points)
    want = set(cfg.quantities)

    columns: dict[str, list[float] | None] = {name: None for name in CSV_COLUMNS[1:]}
    if "g0" in want:
        columns["g0"] = []
    if "j2" in want:
        columns["g2"], columns["gm2"], columns["j2"] = [], [], []
    if "concurrence" in want:
        columns["concurrence"] = []
    if "discord" in want:
        columns["discord"] = []

    for tb in taus:
        tb = float(tb)
        if "g0" in want or "j2" in want:
            prof = analytic_intensities(p, tau_bar=tb)
            if columns["g0"] is not None:
                columns["g0"].append(prof.g0)
            if columns["j2"] is not None:
                columns["g2"].append(prof.g_plus2)
                columns["gm2"].append(prof.g_minus2)
                columns["j2"].append(prof.j2)
        if columns["concurrence"] is not None:
            columns["concurrence"].append(concurrence_analytic(p, tau_bar=tb))
        if columns["discord"] is not None:
            columns["discord"].append(
                discord(evolve_analytic(p, tau_bar=tb), cfg.measured_subsystem).q
            )

    base = Path(cfg.output_path)
    written: list[Path] = []
    if cfg.format in ("csv", "both"):
        csv_path = base.with_suffix(".csv")
        write_csv(csv_path, taus, columns)
        written.append(csv_path)
    if cfg.format in ("svg", "both"):
        svg_path = base.with_suffix(".svg")
        series = {q: np.asarray(columns[q]) for q in QUANTITIES if columns.get(q) is not None}
        write_svg(svg_path, taus, series)
        written.append(svg_path)
    return written


def write_csv(path, taus, columns: dict) -> None:
    lines = [CSV_HEADER]
    for i, tb in enumerate(taus):
        cells = [_format_value(tb)]
        for name in CSV_COLUMNS[1:]:
            col = columns.get(name)
            cells.append(_format_value(col[i]) if col is not None else "")
        lines.append(",".join(cells))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_csv(path) -> dict[str, np.ndarray | None]:
    """Read a sweep CSV back into arrays; absent columns come back as None."""
    lines = Path(path).read_text(encoding="ascii").splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise InvalidConfig(f"unexpected CSV header in {path}")
    cells = [line.split(",") for line in lines[1:]]
    out: dict[str, np.ndarray | None] = {}
    for j, name in enumerate(CSV_COLUMNS):
        raw = [row[j] for row in cells]
        out[name] = None if any(v == "" for v in raw) else np.array([float(v) for v in raw])
    return out


def write_svg(path, taus, series: dict[str, np.ndarray], width: int = 880, height: int = 560) -> None:
    """Minimal static line plot: axes, ticks, one polyline per series, legend."""
    ml, mr, mt, mb = 72, 18, 18, 56
    plot_w, plot_h = width - ml - mr, height - mt - mb
    taus = np.asarray(taus, dtype=float)
    x_lo, x_hi = float(taus[0]), float(taus[-1])

    if series:
        y_lo = min(0.0, min(float(np.min(v)) for v in series.values()))
        y_hi = max(float(np.max(v)) for v in series.values())
    else:
        y_lo, y_hi = 0.0, 1.0
    if y_hi - y_lo < 1e-12:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def sx(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y):
        return mt + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#444444" stroke-width="1"/>',
    ]
    for xv in np.linspace(x_lo, x_hi, 6):
        xpx = sx(xv)
        parts.append(
            f'<line x1="{xpx:.2f}" y1="{mt + plot_h}" x2="{xpx:.2f}" '
            f'y2="{mt + plot_h + 5}" stroke="#444444"/>'
        )
        parts.append(
            f'<text x="{xpx:.2f}" y="{mt + plot_h + 20}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{xv:.4g}</text>'
        )
    for yv in np.linspace(y_lo, y_hi, 6):
        ypx = sy(yv)
        parts.append(
            f'<line x1="{ml - 5}" y1="{ypx:.2f}" x2="{ml}" y2="{ypx:.2f}" stroke="#444444"/>'
        )
        parts.append(
            f'<text x="{ml - 8}" y="{ypx:.2f}" font-size="12" text-anchor="end" '
            f'dominant-baseline="middle" font-family="sans-serif">{yv:.4g}</text>'
        )
    parts.append(
        f'<text x="{ml + plot_w / 2:.2f}" y="{height - 14}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">tau_bar</text>'
    )

    for idx, (name, values) in enumerate(series.items()):
        color = _SVG_COLORS.get(name, "#333333")
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(taus, values))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = mt + 16 + 18 * idx
        parts.append(
            f'<line x1="{ml + plot_w - 130}" y1="{ly}" x2="{ml + plot_w - 105}" '
            f'y2="{ly}" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{ml + plot_w - 100}" y="{ly + 4}" font-size="12" '
            f'font-family="sans-serif">{name}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="ascii")
