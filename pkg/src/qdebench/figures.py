"""Matplotlib rendering of the report data, written next to the raw files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # file output only; never require a display

import matplotlib.pyplot as plt

from .de import ConvergenceTrace
from .harness import TimingRecord

_CYCLE = ("tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple",
          "tab:brown", "tab:pink", "tab:gray")


def save_convergence_figure(traces_by_label: dict[str, list[ConvergenceTrace]],
                            path: Path) -> Path:
    """Best error per generation, one curve per run, grouped by color."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for j, (label, traces) in enumerate(traces_by_label.items()):
        color = _CYCLE[j % len(_CYCLE)]
        for i, trace in enumerate(traces):
            ax.semilogy([r.generation for r in trace.records],
                        [max(r.best_error, 1e-300) for r in trace.records],
                        color=color, alpha=0.7, linewidth=1.0,
                        label=label if i == 0 else None)
    ax.set_xlabel("generation")
    ax.set_ylabel("best error")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_points_figure(points_by_label: dict[str, list], path: Path) -> Path:
    """Convergence points: generation on X, best-individual index on Y."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for j, (label, points) in enumerate(points_by_label.items()):
        xs = [p[0] for p in points if p is not None]
        ys = [p[1] for p in points if p is not None]
        ax.scatter(xs, ys, color=_CYCLE[j % len(_CYCLE)], label=label, s=36)
    ax.set_xlabel("generation of first crossing")
    ax.set_ylabel("population index of best solution")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_timing_figure(records: list[TimingRecord], path: Path) -> Path:
    """Measured seconds per trial, grouped by sample size."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    sizes = sorted({r.sample_size for r in records})
    backends = sorted({r.backend for r in records})
    for j, backend in enumerate(backends):
        for k, size in enumerate(sizes):
            secs = [r.seconds for r in records
                    if r.backend == backend and r.sample_size == size]
            xs = [k + (j - (len(backends) - 1) / 2) * 0.15] * len(secs)
            ax.plot(xs, secs, "o", color=_CYCLE[j % len(_CYCLE)],
                    label=backend if k == 0 else None)
    ax.set_xticks(range(len(sizes)), [str(s) for s in sizes])
    ax.set_xlabel("sample size")
    ax.set_ylabel("seconds")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
