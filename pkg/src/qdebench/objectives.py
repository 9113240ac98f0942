"""Benchmark fitness functions, their search boxes, and the error metric.

Selection in the optimizer is driven by *error*: the objective value minus
the function's known global minimum value, which is nonnegative and zero
exactly at a global minimizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

RASTRIGIN_BOUND = 5.12   # conventional search box for the multimodal benchmark
ROSENBROCK_BOUND = 30.0  # the valley benchmark is defined here on [-30, 30]


def _check_vector(x, min_len: int = 1) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < min_len:
        raise ValueError(f"expected a 1-d vector of length >= {min_len}, "
                         f"got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("input vector contains non-finite values")
    return x


def rastrigin(x) -> float:
    """sum_j [x_j**2 - 10 cos(2 pi x_j)] + 10 n; global minimum 0 at the origin."""
    x = _check_vector(x, min_len=1)
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)) + 10.0 * x.size)


def rosenbrock(x) -> float:
    """sum_i [100 (x_{i+1} - x_i**2)**2 + (x_i - 1)**2] on [-30, 30]^n.

    Global minimum 0 at the all-ones point.  Components outside the
    defining box are rejected; the optimizer clamps trial vectors before
    evaluation, so in-loop inputs are always in range.
    """
    x = _check_vector(x, min_len=2)
    if np.any(np.abs(x) > ROSENBROCK_BOUND):
        raise ValueError(f"rosenbrock is defined on "
                         f"[-{ROSENBROCK_BOUND}, {ROSENBROCK_BOUND}] per component")
    d = x[1:] - x[:-1] ** 2
    return float(np.sum(100.0 * d * d + (x[:-1] - 1.0) ** 2))


def rosenbrock_alt(x) -> float:
    """Alternate valley form: sum_i [(100 (x_{i+1} - x_i)**2)**2 + (x_i - 1)**2].

    Squares the scaled first difference instead of the curvature term
    (x_{i+1} - x_i**2), giving a quartic penalty on successive differences.
    Kept for comparison runs; the global minimum is also 0 at all-ones.
    """
    x = _check_vector(x, min_len=2)
    if np.any(np.abs(x) > ROSENBROCK_BOUND):
        raise ValueError(f"rosenbrock_alt is defined on "
                         f"[-{ROSENBROCK_BOUND}, {ROSENBROCK_BOUND}] per component")
    d = x[1:] - x[:-1]
    return float(np.sum((100.0 * d * d) ** 2 + (x[:-1] - 1.0) ** 2))


@dataclass(frozen=True)
class ObjectiveFunction:
    """A benchmark function with its box bounds and known global minimum."""

    name: str
    dim: int
    lower_bound: float
    upper_bound: float
    global_minimum_value: float
    global_minimizer: np.ndarray
    fn: Callable[[np.ndarray], float]

    def evaluate(self, x) -> float:
        return self.fn(x)


def error(f: ObjectiveFunction, x) -> float:
    """f(x) minus the known global minimum value; nonnegative."""
    return f.evaluate(x) - f.global_minimum_value


def clamp_to_bounds(f: ObjectiveFunction, x) -> np.ndarray:
    """Clip each component into the objective's box; idempotent."""
    x = np.asarray(x, dtype=float)
    return np.clip(x, f.lower_bound, f.upper_bound)


def make_objective(name: str, dim: int,
                   lower: float | None = None,
                   upper: float | None = None) -> ObjectiveFunction:
    """Build a registry entry by name; bounds may override the defaults."""
    if name == "rastrigin":
        if dim < 1:
            raise ValueError("rastrigin requires dim >= 1")
        lo = -RASTRIGIN_BOUND if lower is None else lower
        hi = RASTRIGIN_BOUND if upper is None else upper
        fn = rastrigin
        minimizer = np.zeros(dim)
    elif name in ("rosenbrock", "rosenbrock-alt"):
        if dim < 2:
            raise ValueError(f"{name} requires dim >= 2")
        lo = -ROSENBROCK_BOUND if lower is None else lower
        hi = ROSENBROCK_BOUND if upper is None else upper
        fn = rosenbrock if name == "rosenbrock" else rosenbrock_alt
        minimizer = np.ones(dim)
    else:
        raise ValueError(f"unknown objective {name!r}; "
                         f"expected one of {OBJECTIVE_NAMES}")
    if lo >= hi:
        raise ValueError(f"invalid bounds [{lo}, {hi}]")
    return ObjectiveFunction(name=name, dim=dim, lower_bound=lo, upper_bound=hi,
                             global_minimum_value=0.0, global_minimizer=minimizer,
                             fn=fn)


OBJECTIVE_NAMES = ("rastrigin", "rosenbrock", "rosenbrock-alt")
