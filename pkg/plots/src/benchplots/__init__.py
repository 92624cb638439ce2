"""Timing and speed-ratio figures for shuffle benchmark CSV files."""

from .plots import (
    MissingBaseline,
    MissingColumn,
    PlotSpec,
    load_records,
    plot_ratio,
    plot_timing,
    ratio_series,
)

__all__ = [
    "MissingBaseline",
    "MissingColumn",
    "PlotSpec",
    "load_records",
    "plot_ratio",
    "plot_timing",
    "ratio_series",
]
