"""Minimal statevector qubit simulator: Hadamard gates plus measurement.

The random-number use case needs exactly one circuit shape, H on every
qubit of |0...0> followed by a full measurement, so the simulator keeps a
dense complex amplitude vector and supports nothing beyond that.  Qubit
``q`` is the bit at position ``q`` of the basis-state index (qubit 0 is the
least significant bit).

A register is single-owner mutable state; gates and measurement modify it
in place and return it for chaining.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Dense statevector: 2**24 amplitudes is ~256 MB of complex128, the
# practical ceiling for this representation.
MAX_QUBITS = 24

_H_MATRIX = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


@dataclass
class QuantumRegister:
    """n qubits tracked as 2**n complex amplitudes with unit norm."""

    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def init_register(n_qubits: int) -> QuantumRegister:
    """Prepare |0...0>: amplitude 1 on basis state 0, zero elsewhere."""
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return QuantumRegister(n_qubits=n_qubits, amplitudes=amps)


def apply_hadamard(reg: QuantumRegister, qubit: int) -> QuantumRegister:
    """Apply H to one qubit: paired amplitudes (a, b) -> ((a+b), (a-b))/sqrt(2).

    Pairs are the basis states differing only in the target bit; the
    transform is unitary, so the norm is preserved.
    """
    if not 0 <= qubit < reg.n_qubits:
        raise ValueError(f"qubit {qubit} out of range for "
                         f"{reg.n_qubits}-qubit register")
    # View the target bit as its own axis: index = high | bit<<qubit | low.
    # matmul is a gufunc, so the aliased out= is handled by overlap buffering.
    view = reg.amplitudes.reshape(-1, 2, 1 << qubit)
    np.matmul(_H_MATRIX, view, out=view)
    return reg


def measure_all(reg: QuantumRegister, entropy) -> list[int]:
    """Measure every qubit; collapse the register; return the outcome bits.

    One uniform draw from ``entropy`` selects basis state i by inverse CDF
    over the probabilities |amplitude|**2; the register collapses to |i>.
    The returned list holds the bit of each qubit, qubit 0 first.
    """
    amps = reg.amplitudes
    cdf = np.cumsum(amps.real * amps.real + amps.imag * amps.imag)
    u = entropy.next_uniform()
    outcome = int(np.searchsorted(cdf, u, side="right"))
    outcome = min(outcome, reg.amplitudes.size - 1)  # float tail guard
    reg.amplitudes[:] = 0.0
    reg.amplitudes[outcome] = 1.0
    return [(outcome >> q) & 1 for q in range(reg.n_qubits)]


def sample_bits(n_bits: int, entropy, shot_qubits: int = 8) -> list[int]:
    """Collect n_bits unbiased bits via the prepare/H/measure pipeline.

    Registers of up to ``shot_qubits`` qubits are prepared in |0...0>,
    every qubit gets a Hadamard, and the full register is measured; shots
    repeat until enough bits are gathered.
    """
    if n_bits < 1:
        raise ValueError(f"n_bits must be >= 1, got {n_bits}")
    if not 1 <= shot_qubits <= MAX_QUBITS:
        raise ValueError(f"shot_qubits must be in [1, {MAX_QUBITS}], "
                         f"got {shot_qubits}")
    bits: list[int] = []
    while len(bits) < n_bits:
        k = min(shot_qubits, n_bits - len(bits))
        reg = init_register(k)
        for q in range(k):
            apply_hadamard(reg, q)
        bits.extend(measure_all(reg, entropy))
    return bits[:n_bits]
