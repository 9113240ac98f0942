"""File emission: CSV tables, canonical JSON, and plain plot-data files.

comparison.json is written canonically (sorted keys, fixed indentation,
trailing newline) so identical results serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .de import ConvergenceTrace
from .harness import ComparisonReport, TimingRecord
from .stats import ACCEPTANCE_REGION

TIMINGS_HEADER = "backend,sample_size,trial,seconds"
TRACE_HEADER = "generation,best_error,best_index"
POINTS_HEADER = "label,run,generation,index"


def _write_text(path: Path, text: str) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        raise OSError(f"failed to write {path}: {e}") from e
    return path


def write_timings_csv(records: list[TimingRecord], path: Path) -> Path:
    lines = [TIMINGS_HEADER]
    lines += [f"{r.backend},{r.sample_size},{r.trial},{r.seconds!r}"
              for r in records]
    return _write_text(path, "\n".join(lines) + "\n")


def read_timings_csv(path: Path) -> list[TimingRecord]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != TIMINGS_HEADER:
        raise ValueError(f"{path}: expected header {TIMINGS_HEADER!r}")
    records = []
    for line in lines[1:]:
        backend, size, trial, seconds = line.split(",")
        records.append(TimingRecord(backend=backend, sample_size=int(size),
                                    trial=int(trial), seconds=float(seconds)))
    return records


def write_trace_csv(trace: ConvergenceTrace, path: Path) -> Path:
    lines = [TRACE_HEADER]
    lines += [f"{r.generation},{r.best_error!r},{r.best_index}"
              for r in trace.records]
    return _write_text(path, "\n".join(lines) + "\n")


def read_trace_csv(path: Path) -> list[tuple[int, float, int]]:
    """(generation, best_error, best_index) rows; floats survive round trips."""
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != TRACE_HEADER:
        raise ValueError(f"{path}: expected header {TRACE_HEADER!r}")
    rows = []
    for line in lines[1:]:
        gen, err, idx = line.split(",")
        rows.append((int(gen), float(err), int(idx)))
    return rows


def write_plotdata(trace: ConvergenceTrace, path: Path) -> Path:
    """Two whitespace-separated columns: generation, best error."""
    lines = [f"{r.generation} {r.best_error!r}" for r in trace.records]
    return _write_text(path, "\n".join(lines) + "\n")


def write_convergence_points_csv(points_by_label: dict[str, list],
                                 path: Path) -> Path:
    """One row per run; runs that never converged leave both fields empty."""
    lines = [POINTS_HEADER]
    for label, points in points_by_label.items():
        for i, point in enumerate(points):
            if point is None:
                lines.append(f"{label},{i},,")
            else:
                lines.append(f"{label},{i},{point[0]},{point[1]}")
    return _write_text(path, "\n".join(lines) + "\n")


def read_convergence_points_csv(path: Path) -> dict[str, list]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != POINTS_HEADER:
        raise ValueError(f"{path}: expected header {POINTS_HEADER!r}")
    points: dict[str, list] = {}
    for line in lines[1:]:
        label, _, gen, idx = line.split(",")
        points.setdefault(label, []).append(
            (int(gen), int(idx)) if gen else None)
    return points


def comparison_to_dict(report: ComparisonReport) -> dict:
    u = report.utest
    return {
        "group1": report.label1,
        "group2": report.label2,
        "metric": report.metric,
        "n1": u.n1,
        "n2": u.n2,
        "U1": u.U1,
        "U2": u.U2,
        "mu": u.mu,
        "sigma": u.sigma,
        "Z": u.Z,
        "p_two_tailed": u.p_two_tailed,
        "r_effect": u.r_effect,
        "cl_effect": u.cl_effect,
        "acceptance_region": list(ACCEPTANCE_REGION),
        "values1": report.values1,
        "values2": report.values2,
    }


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_comparison_json(report: ComparisonReport, path: Path) -> Path:
    return _write_text(path, canonical_json(comparison_to_dict(report)))


def emit_results(output_dir: Path, formats,
                 traces_by_label: dict[str, list[ConvergenceTrace]] | None = None,
                 comparison: ComparisonReport | None = None,
                 timings: list[TimingRecord] | None = None) -> list[Path]:
    """Write every requested artifact into output_dir; returns written paths.

    csv      -> trace_<label>_<run>.csv, convergence_points.csv, timings.csv
    json     -> comparison.json
    plotdata -> plot_<label>_<run>.dat
    png      -> rendered figures for whatever data is present
    """
    output_dir = Path(output_dir)
    written: list[Path] = []
    traces_by_label = traces_by_label or {}

    if "csv" in formats:
        for label, traces in traces_by_label.items():
            for i, trace in enumerate(traces):
                written.append(write_trace_csv(
                    trace, output_dir / f"trace_{label}_{i}.csv"))
        if traces_by_label:
            points = {label: [t.convergence_point for t in traces]
                      for label, traces in traces_by_label.items()}
            written.append(write_convergence_points_csv(
                points, output_dir / "convergence_points.csv"))
        if timings is not None:
            written.append(write_timings_csv(timings, output_dir / "timings.csv"))

    if "json" in formats and comparison is not None:
        written.append(write_comparison_json(
            comparison, output_dir / "comparison.json"))

    if "plotdata" in formats:
        for label, traces in traces_by_label.items():
            for i, trace in enumerate(traces):
                written.append(write_plotdata(
                    trace, output_dir / f"plot_{label}_{i}.dat"))

    if "png" in formats:
        from . import figures  # matplotlib import deferred to the render path
        if traces_by_label:
            written.append(figures.save_convergence_figure(
                traces_by_label, output_dir / "convergence.png"))
            points = {label: [t.convergence_point for t in traces]
                      for label, traces in traces_by_label.items()}
            if any(p is not None for pts in points.values() for p in pts):
                written.append(figures.save_points_figure(
                    points, output_dir / "convergence_points.png"))
        if timings is not None:
            written.append(figures.save_timing_figure(
                timings, output_dir / "timings.png"))

    return written
