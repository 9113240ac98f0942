"""Uniform random sources feeding every stochastic operation in the suite.

Two interchangeable backends are provided:

* ``ClassicalSource`` -- PCG32 (the XSH-RR 64/32 member of the PCG family),
  re-implemented here so the emitted stream is identical across platforms
  and library versions.  The generator runs on a fixed stream constant (54),
  which makes its output for seed 42 checkable against the sample output
  shipped with the reference C implementation.
* ``QuantumSource`` -- assembles each uniform from qubit measurements: a
  register is prepared in |0...0>, a Hadamard gate is applied to every
  qubit, and the register is measured.  The collected bits form an integer
  ``v`` and the sample is ``v / 2**bits_per_sample``.

Note that ``QuantumSource`` is a *simulation*: measurement outcomes are
resolved by an internal PCG32 stream, so the source is fully deterministic
given its seed.  It reproduces the sampling procedure of a quantum RNG, not
the physical entropy of one.

Both backends emit values in [0, 1) and both are single-owner mutable
state: create one source per run, do not share across threads.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_PCG_MULT = 6364136223846793005
# Stream constant of the reference demo program; pinned so seed 42
# reproduces the published sample output (first word 0xa15c02b7).
_PCG_STREAM = 54


class Pcg32:
    """PCG32 core generator: 64-bit state, 32-bit XSH-RR output."""

    def __init__(self, seed: int, stream: int = _PCG_STREAM):
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = 0
        self.inc = ((stream << 1) | 1) & _MASK64
        self.next_u32()
        self.state = (self.state + seed) & _MASK64
        self.next_u32()

    def next_u32(self) -> int:
        old = self.state
        self.state = (old * _PCG_MULT + self.inc) & _MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF


class RandomSource:
    """Base class: a deterministic stream of uniforms plus derived draws.

    Subclasses implement ``next_uniform``; everything else is defined in
    terms of it, so each derived draw consumes a countable number of
    uniforms (``next_uniform_in`` and ``next_index`` consume exactly one).
    """

    kind = "abstract"

    def next_uniform(self) -> float:
        """Return the next uniform sample in [0, 1)."""
        raise NotImplementedError

    def next_uniform_in(self, lo: float, hi: float) -> float:
        """Scale one uniform draw into [lo, hi)."""
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"bounds must be finite, got [{lo}, {hi})")
        if lo >= hi:
            raise ValueError(f"empty range: lo={lo} >= hi={hi}")
        return lo + self.next_uniform() * (hi - lo)

    def next_index(self, n: int) -> int:
        """Return a uniform integer in [0, n) from one uniform draw."""
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        i = int(self.next_uniform() * n)
        return min(i, n - 1)  # guards the u ~ 1.0 rounding edge

    def distinct_indices(self, n: int, k: int, exclude: int | None = None) -> list[int]:
        """Draw k pairwise-distinct indices in [0, n), none equal to exclude.

        Uses rejection sampling on ``next_index``, so the number of
        uniforms consumed varies but is reproducible for a given stream.
        """
        available = n - (1 if exclude is not None and 0 <= exclude < n else 0)
        if k < 1 or k > available:
            raise ValueError(f"cannot draw {k} distinct indices from [0, {n}) "
                             f"excluding {exclude}")
        chosen: list[int] = []
        while len(chosen) < k:
            i = self.next_index(n)
            if i == exclude or i in chosen:
                continue
            chosen.append(i)
        return chosen


class ClassicalSource(RandomSource):
    """Seeded PCG32 stream; uniforms have 2**-32 granularity."""

    kind = "classical"

    def __init__(self, seed: int):
        self.seed = seed
        self._gen = Pcg32(seed)

    def next_uniform(self) -> float:
        return self._gen.next_u32() / 4294967296.0  # / 2**32

    def __repr__(self) -> str:
        return f"ClassicalSource(seed={self.seed})"


class QuantumSource(RandomSource):
    """Uniforms built from simulated Hadamard-and-measure qubit sampling.

    Each sample concatenates ``bits_per_sample`` measured bits, gathered in
    shots of at most ``shot_qubits`` qubits (statevector cost grows as
    2**shot_qubits, so shots stay small).  Measurement outcomes are resolved
    by an internal PCG32 stream; the source is deterministic given
    (seed, bits_per_sample, shot_qubits).
    """

    kind = "qsim"

    def __init__(self, seed: int, bits_per_sample: int = 32, shot_qubits: int = 8):
        from . import qsim  # deferred: qsim has no dependency on this module

        if bits_per_sample < 1:
            raise ValueError(f"bits_per_sample must be >= 1, got {bits_per_sample}")
        if not 1 <= shot_qubits <= qsim.MAX_QUBITS:
            raise ValueError(f"shot_qubits must be in [1, {qsim.MAX_QUBITS}], "
                             f"got {shot_qubits}")
        self.seed = seed
        self.bits_per_sample = bits_per_sample
        self.shot_qubits = shot_qubits
        self._sample_bits = qsim.sample_bits
        # Classical entropy resolving the simulated measurements.
        self._entropy = ClassicalSource(seed)
        self._denom = float(1 << bits_per_sample)

    def next_uniform(self) -> float:
        bits = self._sample_bits(self.bits_per_sample, self._entropy,
                                 shot_qubits=self.shot_qubits)
        value = 0
        for b in bits:  # first measured bit is the most significant
            value = (value << 1) | b
        return value / self._denom

    def __repr__(self) -> str:
        return (f"QuantumSource(seed={self.seed}, "
                f"bits_per_sample={self.bits_per_sample}, "
                f"shot_qubits={self.shot_qubits})")


SOURCE_KINDS = ("classical", "qsim")


def make_source(kind: str, seed: int, bits_per_sample: int = 32,
                shot_qubits: int = 8) -> RandomSource:
    """Construct a source by kind name ("classical" or "qsim")."""
    if kind == "classical":
        return ClassicalSource(seed)
    if kind == "qsim":
        return QuantumSource(seed, bits_per_sample=bits_per_sample,
                             shot_qubits=shot_qubits)
    raise ValueError(f"unknown source kind {kind!r}; expected one of {SOURCE_KINDS}")
