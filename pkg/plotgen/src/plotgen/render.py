"""Render concurrence figures from sweep CSV files.

Input is the CSV produced by the `xxring figure` command: header
``pair,j_sign,B,tau,concurrence``, one series per fixed (j_sign, B) pair for
the temperature sweeps (figures 1 and 3) or per fixed (j_sign, tau) pair for
the field sweeps (figures 2 and 4). Rendering is read-only over the CSV;
the returned series mapping makes "same input, same plotted data" testable.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)


class PlotgenError(Exception):
    pass


class MissingColumn(PlotgenError):
    pass


class EmptySeries(PlotgenError):
    pass


class SeriesCountMismatch(PlotgenError):
    pass


class BadFigureId(PlotgenError):
    pass


REQUIRED_COLUMNS = ("pair", "j_sign", "B", "tau", "concurrence")

# per figure: series grouping column, x column, expected series count,
# whether the J>0 series are drawn dotted (figures 3 and 4 captions)
_PRESETS = {
    1: ("B", "tau", 6, False),
    2: ("tau", "B", 6, False),
    3: ("B", "tau", 6, True),
    4: ("tau", "B", 4, True),
}


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    csv_path: str
    series_column: str
    x_column: str
    x_label: str
    y_label: str
    out_path: str
    expected_series: int
    dotted_positive_j: bool


def figure_spec(figure_id: int, csv_path, out_path) -> FigureSpec:
    """Preset spec for one of the four figures."""
    if figure_id not in _PRESETS:
        raise BadFigureId(f"figure id must be 1..4, got {figure_id}")
    series_col, x_col, count, dotted = _PRESETS[figure_id]
    pair_label = "C12" if figure_id in (1, 2) else "C13"
    x_label = "scaled temperature tau = kT/|J|" if x_col == "tau" else "impurity field B"
    return FigureSpec(
        figure_id=figure_id,
        csv_path=str(csv_path),
        series_column=series_col,
        x_column=x_col,
        x_label=x_label,
        y_label=f"concurrence {pair_label}",
        out_path=str(out_path),
        expected_series=count,
        dotted_positive_j=dotted,
    )


@dataclass(frozen=True)
class Series:
    label: str
    j_sign: int
    fixed_value: float
    x: tuple[float, ...]
    y: tuple[float, ...]
    linestyle: str


def _read_rows(csv_path: str) -> list[dict[str, str]]:
    with open(csv_path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise MissingColumn(f"CSV {csv_path} lacks column {column!r}")
        return list(reader)


def load_series(spec: FigureSpec) -> list[Series]:
    """Group CSV rows into plot series, in first-appearance order."""
    rows = _read_rows(spec.csv_path)
    if not rows:
        raise EmptySeries(f"CSV {spec.csv_path} contains no data rows")

    grouped: dict[tuple[str, str], list[dict[str, str]]] = {}
    for row in rows:
        key = (row["j_sign"], row[spec.series_column])
        grouped.setdefault(key, []).append(row)

    series = []
    for (j_text, fixed_text), members in grouped.items():
        if not members:
            raise EmptySeries(f"series {j_text}, {fixed_text} has no rows")
        j_sign = int(j_text)
        dotted = spec.dotted_positive_j and j_sign > 0
        name = "tau" if spec.series_column == "tau" else "B"
        series.append(Series(
            label=f"{name}={fixed_text}, J{'>' if j_sign > 0 else '<'}0",
            j_sign=j_sign,
            fixed_value=float(fixed_text),
            x=tuple(float(r[spec.x_column]) for r in members),
            y=tuple(float(r["concurrence"]) for r in members),
            linestyle=":" if dotted else "-",
        ))

    if len(series) != spec.expected_series:
        raise SeriesCountMismatch(
            f"figure {spec.figure_id} expects {spec.expected_series} series, "
            f"found {len(series)} in {spec.csv_path}"
        )
    return series


def render_figure(spec: FigureSpec) -> list[Series]:
    """Write the figure image and return the exact series that were drawn."""
    series = load_series(spec)
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    try:
        for s in series:
            ax.plot(s.x, s.y, linestyle=s.linestyle, linewidth=1.6, label=s.label)
        ax.set_xlabel(spec.x_label)
        ax.set_ylabel(spec.y_label)
        ax.set_ylim(bottom=0.0)
        ax.legend(fontsize=9)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        Path(spec.out_path).parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.out_path, dpi=150)
    finally:
        plt.close(fig)
    return series
