"""Figure rendering for xxring concurrence CSV data."""

from .render import (
    EmptySeries,
    FigureSpec,
    MissingColumn,
    PlotgenError,
    Series,
    SeriesCountMismatch,
    figure_spec,
    load_series,
    render_figure,
)

__version__ = "0.1.0"

__all__ = [
    "EmptySeries",
    "FigureSpec",
    "MissingColumn",
    "PlotgenError",
    "Series",
    "SeriesCountMismatch",
    "figure_spec",
    "load_series",
    "render_figure",
]
