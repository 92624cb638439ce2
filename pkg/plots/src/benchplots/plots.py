"""Figures from shuffle-benchmark CSV files.

Input schema (one row per algorithm/generator/size):

    algorithm,generator,n,avg_ns_per_element,min_ns_per_element

Two figure kinds, one PNG per generator found in the CSV:

  timing_<generator>.png -- average ns/element vs n, log-scaled x, one
      line per algorithm.
  ratio_<generator>.png  -- baseline time divided by each algorithm's
      time per n, with a reference line at 1.0; the baseline's own curve
      is identically 1.0.

Reading is strictly read-only and re-rendering is idempotent.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

REQUIRED_COLUMNS = ("algorithm", "generator", "n", "avg_ns_per_element", "min_ns_per_element")


class MissingColumn(ValueError):
    """The CSV lacks one of the required columns."""


class MissingBaseline(ValueError):
    """The ratio baseline has no row for a size another algorithm has."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: Path
    output_dir: Path
    kind: str  # "timing" | "ratio"
    baseline_algorithm: str = "shuffle"

    def __post_init__(self):
        if self.kind not in ("timing", "ratio"):
            raise ValueError(f"kind must be 'timing' or 'ratio', got {self.kind!r}")


def load_records(path) -> list[dict]:
    """Rows as dicts with n and timings parsed; errors name what is missing."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise MissingColumn(f"column {column!r} missing from {path}")
        records = [
            {
                "algorithm": row["algorithm"],
                "generator": row["generator"],
                "n": int(row["n"]),
                "avg_ns_per_element": float(row["avg_ns_per_element"]),
                "min_ns_per_element": float(row["min_ns_per_element"]),
            }
            for row in reader
        ]
    if not records:
        raise ValueError(f"no data rows in {path}")
    return records


def generators_in(records) -> list[str]:
    return sorted({r["generator"] for r in records})


def _series_by_algorithm(records, generator):
    """{algorithm: {n: avg_ns_per_element}} for one generator."""
    series: dict[str, dict[int, float]] = {}
    for r in records:
        if r["generator"] == generator:
            series.setdefault(r["algorithm"], {})[r["n"]] = r["avg_ns_per_element"]
    return series


def ratio_series(records, generator, baseline) -> dict[str, list[tuple[int, float]]]:
    """Per algorithm: sorted (n, baseline_time / algorithm_time) pairs."""
    series = _series_by_algorithm(records, generator)
    if baseline not in series:
        raise MissingBaseline(f"baseline {baseline!r} has no rows for {generator!r}")
    base = series[baseline]
    ratios = {}
    for algorithm, points in series.items():
        pairs = []
        for n in sorted(points):
            if n not in base:
                raise MissingBaseline(
                    f"baseline {baseline!r} missing n={n} present for {algorithm!r}"
                )
            pairs.append((n, base[n] / points[n]))
        ratios[algorithm] = pairs
    return ratios


def plot_timing(spec: PlotSpec) -> list[Path]:
    """One timing figure per generator; returns the written paths."""
    records = load_records(spec.input_csv)
    spec.output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for generator in generators_in(records):
        series = _series_by_algorithm(records, generator)
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for algorithm in sorted(series):
            points = series[algorithm]
            ns = sorted(points)
            ax.plot(ns, [points[n] for n in ns], marker="o", label=algorithm)
        ax.set_xscale("log", base=2)
        ax.set_xlabel("array length")
        ax.set_ylabel("avg ns / element")
        ax.set_title(f"shuffle timings, {generator} generator")
        ax.grid(True, alpha=0.3)
        ax.legend()
        path = spec.output_dir / f"timing_{generator}.png"
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written


def plot_ratio(spec: PlotSpec) -> list[Path]:
    """One speed-ratio figure per generator; returns the written paths."""
    records = load_records(spec.input_csv)
    spec.output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for generator in generators_in(records):
        ratios = ratio_series(records, generator, spec.baseline_algorithm)
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for algorithm in sorted(ratios):
            pairs = ratios[algorithm]
            ax.plot([n for n, _ in pairs], [v for _, v in pairs], marker="o", label=algorithm)
        ax.axhline(1.0, color="grey", linewidth=1, linestyle="--")
        ax.set_xscale("log", base=2)
        ax.set_xlabel("array length")
        ax.set_ylabel(f"speed vs {spec.baseline_algorithm}")
        ax.set_title(f"speed ratios, {generator} generator")
        ax.grid(True, alpha=0.3)
        ax.legend()
        path = spec.output_dir / f"ratio_{generator}.png"
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="benchplots", description="Render figures from a benchmark CSV."
    )
    parser.add_argument("--csv", required=True, help="benchmark CSV path")
    parser.add_argument("--out", required=True, help="output directory for PNG files")
    parser.add_argument("--kind", choices=("timing", "ratio"), default="timing")
    parser.add_argument("--baseline", default="shuffle",
                        help="baseline algorithm for ratio plots (default: shuffle)")
    args = parser.parse_args(argv)
    spec = PlotSpec(Path(args.csv), Path(args.out), args.kind, args.baseline)
    render = plot_timing if args.kind == "timing" else plot_ratio
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
