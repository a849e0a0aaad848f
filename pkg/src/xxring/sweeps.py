"""Parameter sweeps over (B, tau) grids and the four preset figure data sets.

Output is CSV with the fixed header ``pair,j_sign,B,tau,concurrence``, rows
in deterministic grid order (B outer, tau inner for plain sweeps; series
order then sweep axis for figures), every float printed with 10 significant
digits. Re-runs are byte-identical regardless of the thread count: workers
only evaluate points, assembly is ordered.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .entanglement import VALID_PAIRS, concurrence_pair
from .errors import BadFigureId, InvalidSweepConfig
from .model import ModelParams
from .thermal import ThermalParams

CSV_HEADER = "pair,j_sign,B,tau,concurrence"


@dataclass(frozen=True)
class SweepRow:
    pair: int
    j_sign: int
    b: float
    tau: float
    concurrence: float


@dataclass(frozen=True)
class SweepConfig:
    pair: int
    j_sign: int
    b_values: tuple[float, ...]
    tau_values: tuple[float, ...]
    out_path: str

    def __post_init__(self):
        if self.pair not in VALID_PAIRS:
            raise InvalidSweepConfig(f"pair must be one of {VALID_PAIRS}, got {self.pair}")
        if self.j_sign not in (1, -1):
            raise InvalidSweepConfig(f"j_sign must be +1 or -1, got {self.j_sign}")
        if len(self.b_values) < 1 or len(self.tau_values) < 1:
            raise InvalidSweepConfig("need at least one B value and one tau value")
        if any(t <= 0.0 for t in self.tau_values):
            raise InvalidSweepConfig("all tau values must be > 0")


def parse_range(spec: str) -> tuple[float, ...]:
    """Parse 'min:max:count' into an inclusive linear grid."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InvalidSweepConfig(f"range must be min:max:count, got {spec!r}")
    lo, hi = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise InvalidSweepConfig(f"range count must be >= 1, got {count}")
    return tuple(float(x) for x in np.linspace(lo, hi, count))


def _evaluate(pair: int, j_sign: int, b: float, tau: float) -> SweepRow:
    c = concurrence_pair(ModelParams(j=float(j_sign), b=b), ThermalParams(tau=tau, j_sign=j_sign), pair)
    return SweepRow(pair=pair, j_sign=j_sign, b=b, tau=tau, concurrence=c)


def _evaluate_grid(points, threads: int) -> list[SweepRow]:
    if threads <= 1:
        return [_evaluate(*p) for p in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: _evaluate(*p), points))


def sweep_rows(config: SweepConfig, threads: int = 1) -> list[SweepRow]:
    """Evaluate the sweep grid in row-major order (B outer, tau inner)."""
    points = [
        (config.pair, config.j_sign, b, tau)
        for b in config.b_values
        for tau in config.tau_values
    ]
    return _evaluate_grid(points, threads)


def format_float(x: float, sig: int = 10) -> str:
    return f"{float(x):.{sig}g}"


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.pair},{r.j_sign},{format_float(r.b)},{format_float(r.tau)},"
            f"{format_float(r.concurrence)}"
        )
    return "\n".join(lines) + "\n"


def write_csv(rows, path) -> None:
    Path(path).write_text(rows_to_csv(rows), encoding="utf-8", newline="\n")


_TAU_AXIS = tuple(float(t) for t in np.linspace(0.05, 3.0, 200))
_B_AXIS = tuple(float(b) for b in np.linspace(0.0, 12.0, 200))


@dataclass(frozen=True)
class FigurePreset:
    """One figure's data layout: the swept axis plus fixed (j_sign, value)
    series, where the value pins B for tau sweeps and tau for B sweeps."""

    figure_id: int
    pair: int
    axis: str  # "tau" or "B"
    axis_values: tuple[float, ...]
    series: tuple[tuple[int, float], ...]


FIGURE_PRESETS = {
    1: FigurePreset(1, 12, "tau", _TAU_AXIS,
                    tuple((j, b) for j in (1, -1) for b in (0.0, 1.0, 10.0))),
    2: FigurePreset(2, 12, "B", _B_AXIS,
                    tuple((j, t) for j in (1, -1) for t in (0.1, 0.5, 1.0))),
    3: FigurePreset(3, 13, "tau", _TAU_AXIS,
                    tuple((j, b) for j in (1, -1) for b in (0.0, 1.0, 10.0))),
    4: FigurePreset(4, 13, "B", _B_AXIS,
                    ((-1, 0.1), (-1, 0.5), (-1, 1.0), (1, 2.0))),
}


def figure_preset(figure_id: int) -> FigurePreset:
    try:
        return FIGURE_PRESETS[int(figure_id)]
    except (KeyError, ValueError):
        raise BadFigureId(f"figure id must be 1..4, got {figure_id}") from None


def figure_rows(figure_id: int, threads: int = 1) -> list[SweepRow]:
    """Rows for one preset figure, series by series along the swept axis."""
    preset = figure_preset(figure_id)
    points = []
    for j_sign, fixed in preset.series:
        for x in preset.axis_values:
            b, tau = (fixed, x) if preset.axis == "tau" else (x, fixed)
            points.append((preset.pair, j_sign, b, tau))
    return _evaluate_grid(points, threads)
