"""Experiment orchestration: timed sampling, run groups, group comparison.

A *group* is a set of independent optimizer runs sharing one configuration
(objective, entropy backend, DE parameters); run i uses seed
``base_seed + i`` so groups are reproducible while runs stay independent.
Groups are reduced to per-run scalars and compared with the Mann-Whitney
U test.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from pathlib import Path

from .de import ConvergenceTrace, DEConfig, run
from .objectives import make_objective
from .rng import make_source
from .stats import UTestResult, run_utest

SAMPLE_SIZES = (10, 50, 100)
FORMATS = ("csv", "json", "plotdata", "png")

# generations_to_epsilon: first generation whose best error reaches the
# configured tolerance; runs that never reach it are censored at max_gen.
# final_best_error: the error of the overall best solution.
METRICS = ("generations_to_epsilon", "final_best_error")


@dataclass
class ExperimentConfig:
    """One group's configuration plus reporting options."""

    objective: str = "rastrigin"
    rng_kind: str = "classical"
    de: DEConfig = field(default_factory=DEConfig)
    runs_per_group: int = 7
    base_seed: int = 0
    bits_per_sample: int = 32
    sample_sizes: tuple[int, ...] = SAMPLE_SIZES
    timing_repeats: int = 3
    output_dir: Path | None = None
    formats: tuple[str, ...] = FORMATS

    def __post_init__(self):
        if self.runs_per_group < 2:
            raise ValueError(f"runs_per_group must be >= 2, "
                             f"got {self.runs_per_group}")
        if any(s < 1 for s in self.sample_sizes):
            raise ValueError(f"sample sizes must be >= 1, "
                             f"got {self.sample_sizes}")
        if self.timing_repeats < 1:
            raise ValueError(f"timing_repeats must be >= 1, "
                             f"got {self.timing_repeats}")
        unknown = set(self.formats) - set(FORMATS)
        if unknown:
            raise ValueError(f"unknown formats {sorted(unknown)}; "
                             f"expected a subset of {FORMATS}")

    def label(self) -> str:
        return f"{self.objective}-{self.rng_kind}"


@dataclass(frozen=True)
class TimingRecord:
    """Wall-clock seconds for one timed sampling trial."""

    backend: str
    sample_size: int
    trial: int
    seconds: float


@dataclass
class ComparisonReport:
    """Two groups reduced to scalars plus the test over them."""

    label1: str
    label2: str
    metric: str
    values1: list[float]
    values2: list[float]
    utest: UTestResult
    points1: list[tuple[int, int] | None]
    points2: list[tuple[int, int] | None]


def time_population_generation(backend: str, sample_size: int, repeats: int,
                               dim: int = 3, seed: int = 0,
                               bits_per_sample: int = 32) -> list[TimingRecord]:
    """Time drawing sample_size * dim uniforms through a backend.

    One source serves all repeats, so trial 0 is the cold run and later
    trials are warm.
    """
    if sample_size < 1:
        raise ValueError(f"sample_size must be >= 1, got {sample_size}")
    source = make_source(backend, seed, bits_per_sample=bits_per_sample)
    records = []
    n_draws = sample_size * dim
    for trial in range(repeats):
        t0 = time.perf_counter()
        for _ in range(n_draws):
            source.next_uniform()
        records.append(TimingRecord(backend=backend, sample_size=sample_size,
                                    trial=trial,
                                    seconds=time.perf_counter() - t0))
    return records


def timing_table(backend: str, sample_sizes=SAMPLE_SIZES, repeats: int = 3,
                 dim: int = 3, seed: int = 0,
                 bits_per_sample: int = 32) -> list[TimingRecord]:
    """Timing records for every sample size (the repeats x sizes table)."""
    records = []
    for size in sample_sizes:
        records.extend(time_population_generation(
            backend, size, repeats, dim=dim, seed=seed,
            bits_per_sample=bits_per_sample))
    return records


def run_group(cfg: ExperimentConfig, group_label: str | None = None,
              progress=None) -> list[ConvergenceTrace]:
    """Execute runs_per_group independent runs, seeds base_seed + run index."""
    f = make_objective(cfg.objective, cfg.de.dim)
    traces = []
    for i in range(cfg.runs_per_group):
        source = make_source(cfg.rng_kind, cfg.base_seed + i,
                             bits_per_sample=cfg.bits_per_sample)
        traces.append(run(cfg.de, f, source, progress=progress))
    return traces


def metric_values(traces: list[ConvergenceTrace], metric: str) -> list[float]:
    """Reduce each trace to the comparison scalar."""
    if metric == "generations_to_epsilon":
        return [float(t.convergence_point[0]) if t.convergence_point is not None
                else float(len(t.records)) for t in traces]
    if metric == "final_best_error":
        return [t.final_best.best_error for t in traces]
    raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")


def compare_groups(traces1: list[ConvergenceTrace],
                   traces2: list[ConvergenceTrace],
                   metric: str = "generations_to_epsilon",
                   label1: str = "group1",
                   label2: str = "group2") -> ComparisonReport:
    """Reduce both groups to scalars and run the U test over them."""
    if len(traces1) != len(traces2) or len(traces1) < 2:
        raise ValueError(f"groups must have equal size >= 2, "
                         f"got {len(traces1)} and {len(traces2)}")
    values1 = metric_values(traces1, metric)
    values2 = metric_values(traces2, metric)
    return ComparisonReport(label1=label1, label2=label2, metric=metric,
                            values1=values1, values2=values2,
                            utest=run_utest(values1, values2),
                            points1=[t.convergence_point for t in traces1],
                            points2=[t.convergence_point for t in traces2])


def group_config(base: ExperimentConfig, objective: str | None = None,
                 rng_kind: str | None = None,
                 base_seed: int | None = None) -> ExperimentConfig:
    """Derive a second group's config from a first, overriding a few fields."""
    return replace(base,
                   objective=base.objective if objective is None else objective,
                   rng_kind=base.rng_kind if rng_kind is None else rng_kind,
                   base_seed=base.base_seed if base_seed is None else base_seed)
