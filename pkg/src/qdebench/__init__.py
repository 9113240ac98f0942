"""Differential-evolution benchmarks with pluggable entropy backends.

The suite optimizes classic benchmark functions with DE, drawing all
randomness either from a classical PCG32 stream or from a simulated
quantum source (Hadamard-and-measure qubit sampling), records per-
generation convergence, and compares run groups with the Mann-Whitney
U test.
"""

__version__ = "0.1.0"

from .de import (ConvergenceTrace, DEConfig, GenerationRecord, Population,
                 convergence_point, crossover_binomial, init_population,
                 mutate, run, step_generation)
from .harness import (ComparisonReport, ExperimentConfig, TimingRecord,
                      compare_groups, metric_values, run_group,
                      time_population_generation, timing_table)
from .objectives import (ObjectiveFunction, clamp_to_bounds, error,
                         make_objective, rastrigin, rosenbrock, rosenbrock_alt)
from .qsim import (MAX_QUBITS, QuantumRegister, apply_hadamard, init_register,
                   measure_all, sample_bits)
from .rng import (ClassicalSource, Pcg32, QuantumSource, RandomSource,
                  make_source)
from .stats import (ACCEPTANCE_REGION, DegenerateDataError, UTestResult,
                    average_ranks, effect_sizes, exact_u_distribution,
                    mann_whitney_u, normal_cdf, run_utest,
                    ties_corrected_sigma, two_tailed_p, z_with_continuity)
