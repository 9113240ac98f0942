"""Scripted/counting sources and independent straight-line oracles."""

import math

from qdebench.rng import RandomSource


class ScriptedSource(RandomSource):
    """Replays a fixed list of uniforms; derived draws use the base logic."""

    kind = "scripted"

    def __init__(self, values):
        self.values = list(values)
        self.pos = 0

    def next_uniform(self) -> float:
        v = self.values[self.pos]
        self.pos += 1
        return v


class CountingSource(RandomSource):
    """Wraps a source and counts how many uniforms are consumed."""

    kind = "counting"

    def __init__(self, inner):
        self.inner = inner
        self.calls = 0

    def next_uniform(self) -> float:
        self.calls += 1
        return self.inner.next_uniform()


# Straight-line objective evaluators, deliberately written without numpy
# so they form a separate code path from the library implementations.

def rastrigin_loop(x):
    total = 0.0
    for v in x:
        total += v * v - 10.0 * math.cos(2.0 * math.pi * v)
    return total + 10.0 * len(x)


def rosenbrock_loop(x):
    total = 0.0
    for i in range(len(x) - 1):
        total += 100.0 * (x[i + 1] - x[i] * x[i]) ** 2 + (x[i] - 1.0) ** 2
    return total


def rosenbrock_alt_loop(x):
    total = 0.0
    for i in range(len(x) - 1):
        total += (100.0 * (x[i + 1] - x[i]) ** 2) ** 2 + (x[i] - 1.0) ** 2
    return total


def pair_count_u1(group1, group2):
    """Brute-force U1: group-1 wins over group-2, ties counting one half."""
    u = 0.0
    for a in group1:
        for b in group2:
            if a > b:
                u += 1.0
            elif a == b:
                u += 0.5
    return u
