"""Differential evolution with per-generation best tracking.

Two update schemes are supported:

* ``classic`` -- DE/rand/1/bin.  Every generation sweeps all targets: for
  target i, three distinct donors a, b, c != i are drawn, the mutant
  ``pop[a] + F * (pop[b] - pop[c])`` is recombined with the target by
  binomial crossover, clamped into bounds, and replaces the target iff its
  error is no worse.
* ``paper`` -- a literal single-update variant: one donor triple per
  generation, the clamped mutant is accepted by a single crossover-rate
  draw, and on acceptance it replaces the base individual a (greedy, so
  the population never worsens).

Draw order is part of the determinism contract.  Per classic-mode target:
donor indices by rejection sampling, then the forced crossover dimension
(one index draw), then one uniform per dimension.  Per paper-mode
generation: donor indices, then one acceptance uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .objectives import ObjectiveFunction, clamp_to_bounds, error
from .rng import RandomSource

MODES = ("classic", "paper")


@dataclass
class DEConfig:
    """Mutation/selection parameters; defaults match the benchmark setup."""

    dim: int = 3
    pop_size: int = 50
    F: float = 0.5
    cr: float = 0.7
    max_gen: int = 200
    mode: str = "classic"
    epsilon: float = 1e-4

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if self.pop_size < 4:
            # mutation needs three distinct donors besides the target
            raise ValueError(f"pop_size must be >= 4, got {self.pop_size}")
        if not np.isfinite(self.F):
            raise ValueError(f"F must be finite, got {self.F}")
        if not 0.0 <= self.cr <= 1.0:
            raise ValueError(f"cr must be in [0, 1], got {self.cr}")
        if self.max_gen < 1:
            raise ValueError(f"max_gen must be >= 1, got {self.max_gen}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")


@dataclass
class Population:
    """Candidate pool: pop_size x dim matrix plus the matching error vector."""

    individuals: np.ndarray
    errors: np.ndarray


@dataclass
class GenerationRecord:
    """Best individual of one generation (lowest index wins ties)."""

    generation: int
    best_error: float
    best_solution: np.ndarray
    best_index: int


@dataclass
class ConvergenceTrace:
    """One record per generation plus the overall winner."""

    records: list[GenerationRecord] = field(default_factory=list)
    final_best: GenerationRecord | None = None
    convergence_point: tuple[int, int] | None = None


def init_population(cfg: DEConfig, f: ObjectiveFunction,
                    source: RandomSource) -> Population:
    """Draw pop_size individuals componentwise uniform in the objective's box."""
    if f.dim != cfg.dim:
        raise ValueError(f"objective dim {f.dim} != config dim {cfg.dim}")
    individuals = np.empty((cfg.pop_size, cfg.dim))
    for i in range(cfg.pop_size):
        for k in range(cfg.dim):
            individuals[i, k] = source.next_uniform_in(f.lower_bound, f.upper_bound)
    errors = np.array([error(f, individuals[i]) for i in range(cfg.pop_size)])
    return Population(individuals=individuals, errors=errors)


def mutate(pop: Population, a: int, b: int, c: int, F: float) -> np.ndarray:
    """pop[a] + F * (pop[b] - pop[c]); donors must be pairwise distinct."""
    if len({a, b, c}) != 3:
        raise ValueError(f"donor indices must be distinct, got ({a}, {b}, {c})")
    x = pop.individuals
    return x[a] + F * (x[b] - x[c])


def crossover_binomial(target: np.ndarray, mutant: np.ndarray, cr: float,
                       source: RandomSource) -> np.ndarray:
    """Per-dimension threshold crossover with one forced mutant dimension.

    Dimension k takes the mutant value when its uniform draw is < cr; one
    dimension, chosen uniformly before the per-dimension draws, always
    takes the mutant so the trial differs from the target whenever the
    mutant does.
    """
    target = np.asarray(target, dtype=float)
    mutant = np.asarray(mutant, dtype=float)
    if target.shape != mutant.shape:
        raise ValueError(f"length mismatch: target {target.shape} "
                         f"vs mutant {mutant.shape}")
    dim = target.size
    forced = source.next_index(dim)
    trial = target.copy()
    for k in range(dim):
        if source.next_uniform() < cr or k == forced:
            trial[k] = mutant[k]
    return trial


def _best_record(pop: Population, generation: int) -> GenerationRecord:
    best = int(np.argmin(pop.errors))  # argmin returns the lowest tied index
    return GenerationRecord(generation=generation,
                            best_error=float(pop.errors[best]),
                            best_solution=pop.individuals[best].copy(),
                            best_index=best)


def step_generation(pop: Population, cfg: DEConfig, f: ObjectiveFunction,
                    source: RandomSource) -> GenerationRecord:
    """Advance one generation in place and return its best record."""
    if cfg.mode == "classic":
        for i in range(cfg.pop_size):
            a, b, c = source.distinct_indices(cfg.pop_size, 3, exclude=i)
            mutant = mutate(pop, a, b, c, cfg.F)
            trial = clamp_to_bounds(f, crossover_binomial(
                pop.individuals[i], mutant, cfg.cr, source))
            trial_err = error(f, trial)
            if trial_err <= pop.errors[i]:
                pop.individuals[i] = trial
                pop.errors[i] = trial_err
    else:  # paper: one mutant per generation, replacing the base individual
        a, b, c = source.distinct_indices(cfg.pop_size, 3)
        mutant = clamp_to_bounds(f, mutate(pop, a, b, c, cfg.F))
        if source.next_uniform() < cfg.cr:
            mutant_err = error(f, mutant)
            if mutant_err <= pop.errors[a]:
                pop.individuals[a] = mutant
                pop.errors[a] = mutant_err
    return _best_record(pop, generation=-1)


def run(cfg: DEConfig, f: ObjectiveFunction, source: RandomSource,
        progress=None) -> ConvergenceTrace:
    """Initialize, run max_gen generations, and assemble the trace.

    ``progress``, when given, is called with each GenerationRecord as it is
    produced (the CLI uses this for console output).
    """
    pop = init_population(cfg, f, source)
    trace = ConvergenceTrace()
    for g in range(cfg.max_gen):
        record = step_generation(pop, cfg, f, source)
        record.generation = g
        trace.records.append(record)
        if progress is not None:
            progress(record)
    # overall winner: minimum error over the generational bests,
    # earliest generation on ties
    trace.final_best = min(trace.records, key=lambda r: r.best_error)
    trace.convergence_point = convergence_point(trace, cfg.epsilon)
    return trace


def convergence_point(trace: ConvergenceTrace,
                      epsilon: float) -> tuple[int, int] | None:
    """First (generation, best_index) with best_error <= epsilon, if any."""
    if not trace.records:
        raise ValueError("trace has no records")
    for record in trace.records:
        if record.best_error <= epsilon:
            return (record.generation, record.best_index)
    return None
