"""Parameter sweeps over Otto cycles and the figure-reproduction presets.

Rows are produced in grid order whatever the degree of parallelism, and
the CSV text depends only on the inputs.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .correlations import correlations_at
from .cycle import CycleSpec, evaluate_cycle

KNOBS = ("mu_h", "mu_l", "omega_h", "omega_l", "t_h", "t_l")

# swept variable -> knobs it sets
VARIABLES: Dict[str, Tuple[str, ...]] = {
    "mu_common": ("mu_h", "mu_l"),
    "omega_common": ("omega_h", "omega_l"),
    "mu_hot": ("mu_h",),
    "mu_cold": ("mu_l",),
    "omega_hot": ("omega_h",),
    "omega_cold": ("omega_l",),
    "t_hot": ("t_h",),
    "t_cold": ("t_l",),
}

DEFAULT_KNOBS = dict(mu_h=0.0, mu_l=0.0, omega_h=4.0, omega_l=1.0, t_h=4.0, t_l=1.0)

CSV_HEADER = "x,W,Q_in,Q_out,eta,regime,D_H,D_L,E_H,E_L"


def spec_from_knobs(knobs) -> CycleSpec:
    return CycleSpec.from_values(
        knobs["mu_h"], knobs["omega_h"], knobs["t_h"],
        knobs["mu_l"], knobs["omega_l"], knobs["t_l"],
    )


@dataclass(frozen=True)
class SweepSpec:
    """Linear scan of one knob with every other knob held at ``fixed``."""

    variable: str
    start: float
    stop: float
    points: int
    fixed: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_KNOBS))

    def __post_init__(self):
        if self.variable not in VARIABLES:
            raise ValueError(
                f"unknown sweep variable {self.variable!r}; choose from {', '.join(VARIABLES)}"
            )
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("sweep range must be finite")
        if self.start > self.stop:
            raise ValueError(f"sweep start {self.start} exceeds stop {self.stop}")
        if int(self.points) != self.points or self.points < 2:
            raise ValueError(f"points must be an integer >= 2, got {self.points!r}")
        missing = set(KNOBS) - set(self.fixed)
        if missing:
            raise ValueError(f"missing fixed knobs: {sorted(missing)}")
        # surface invalid rows (e.g. T_H <= T_L) before any evaluation
        for x in self.grid():
            try:
                spec_from_knobs(self.knobs_at(x))
            except ValueError as exc:
                raise ValueError(f"{self.variable}={x:g}: {exc}") from None

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.points))

    def knobs_at(self, x: float) -> Dict[str, float]:
        knobs = {k: float(self.fixed[k]) for k in KNOBS}
        for name in VARIABLES[self.variable]:
            knobs[name] = float(x)
        return knobs

    def cycle_specs(self) -> List[CycleSpec]:
        return [spec_from_knobs(self.knobs_at(x)) for x in self.grid()]


@dataclass(frozen=True)
class SweepRow:
    x: float
    w: float
    q_in: float
    q_out: float
    eta: Optional[float]
    regime: str
    d_hot: float
    d_cold: float
    e_hot: float
    e_cold: float

    def csv_line(self) -> str:
        eta = "" if self.eta is None else format_float(self.eta)
        fields = [
            format_float(self.x),
            format_float(self.w),
            format_float(self.q_in),
            format_float(self.q_out),
            eta,
            self.regime,
            format_float(self.d_hot),
            format_float(self.d_cold),
            format_float(self.e_hot),
            format_float(self.e_cold),
        ]
        return ",".join(fields)


def format_float(value: float) -> str:
    if value == 0.0:
        value = 0.0  # drop the sign of -0.0
    return format(value, ".12g")


def evaluate_point(spec: CycleSpec, x: float = math.nan) -> SweepRow:
    """Cycle thermodynamics plus correlations at both bath endpoints."""
    result = evaluate_cycle(spec)
    hot = correlations_at(spec.hot.params, spec.hot.temperature)
    cold = correlations_at(spec.cold.params, spec.cold.temperature)
    return SweepRow(
        x=x,
        w=result.work,
        q_in=result.q_in,
        q_out=result.q_out,
        eta=result.efficiency,
        regime=result.regime.token,
        d_hot=hot.discord,
        d_cold=cold.discord,
        e_hot=hot.eof,
        e_cold=cold.eof,
    )


def _evaluate_indexed(args):
    x, spec = args
    return evaluate_point(spec, x)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> List[SweepRow]:
    """Evaluate every grid point; ``jobs > 1`` spreads points over processes."""
    tasks = list(zip(spec.grid().tolist(), spec.cycle_specs()))
    if jobs <= 1:
        return [_evaluate_indexed(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order
        return list(pool.map(_evaluate_indexed, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [row.csv_line() for row in rows]) + "\n"


def write_csv(rows, path) -> None:
    with open(path, "w", newline="\n", encoding="ascii") as fh:
        fh.write(rows_to_csv(rows))


# Scan ranges are chosen to bracket the peaks and regime boundaries of each curve family.
def _fig2a():
    fixed = dict(mu_h=0.0, mu_l=0.0, omega_h=4.0, omega_l=1.0, t_h=4.0, t_l=1.0)
    return [("fig2a", SweepSpec("mu_common", 0.0, 6.0, 201, fixed))]


def _fig2b():
    fixed = dict(mu_h=4.0, mu_l=1.0, omega_h=0.0, omega_l=0.0, t_h=4.0, t_l=1.0)
    return [("fig2b", SweepSpec("omega_common", 0.0, 3.0, 201, fixed))]


FIG34_OMEGAS = (0.0, 0.5, 1.0, 1.5, 2.0)
FIG5_OMEGAS = (7.0, 8.0, 9.0, 10.0, 11.0)


def _fig3():
    # T_H = T_L = 1 is not a valid cycle, so the scan starts one step above it
    out = []
    for omega in FIG34_OMEGAS:
        fixed = dict(mu_h=4.0, mu_l=1.0, omega_h=omega, omega_l=omega, t_h=4.0, t_l=1.0)
        out.append((f"fig3_omega_{omega:g}", SweepSpec("t_hot", 1.05, 10.0, 180, fixed)))
    return out


def _fig4():
    out = []
    for omega in FIG34_OMEGAS:
        fixed = dict(mu_h=4.0, mu_l=1.0, omega_h=omega, omega_l=omega, t_h=4.0, t_l=1.0)
        out.append((f"fig4_omega_{omega:g}", SweepSpec("mu_hot", 1.0, 12.0, 221, fixed)))
    return out


def _fig5():
    out = []
    for omega in FIG5_OMEGAS:
        fixed = dict(mu_h=10.0, mu_l=10.0, omega_h=omega, omega_l=omega, t_h=4.0, t_l=1.0)
        out.append((f"fig5_omega_{omega:g}", SweepSpec("mu_cold", 10.0, 60.0, 201, fixed)))
    return out


PRESETS = {
    "fig2a": _fig2a,
    "fig2b": _fig2b,
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
}


def figure_preset(name: str) -> List[Tuple[str, SweepSpec]]:
    """(curve name, sweep) pairs for a figure; one CSV per curve."""
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; valid names: {', '.join(PRESETS)}") from None


def run_figure(name: str, out_dir=".", jobs: int = 1) -> List[str]:
    """Write every curve of a preset into ``out_dir``; returns the paths."""
    paths = []
    for curve, spec in figure_preset(name):
        path = os.path.join(out_dir, f"{curve}.csv")
        write_csv(run_sweep(spec, jobs=jobs), path)
        paths.append(path)
    return paths

