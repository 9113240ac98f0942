"""Statevector simulator: preparation, Hadamard algebra, measurement."""

import numpy as np
import pytest

from qdebench.qsim import (MAX_QUBITS, apply_hadamard, init_register,
                           measure_all, sample_bits)
from qdebench.rng import ClassicalSource

from helpers import CountingSource, ScriptedSource

CHI2_CRIT_DF15 = 30.578  # upper 1% quantile, frozen from standard tables
INV_SQRT2 = 2 ** -0.5


def random_register(rng, n):
    reg = init_register(n)
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    reg.amplitudes[:] = amps / np.linalg.norm(amps)
    return reg


class TestInitRegister:
    def test_single_qubit(self):
        reg = init_register(1)
        assert reg.n_qubits == 1
        np.testing.assert_array_equal(reg.amplitudes, [1.0, 0.0])

    def test_two_qubits(self):
        np.testing.assert_array_equal(init_register(2).amplitudes,
                                      [1.0, 0.0, 0.0, 0.0])

    def test_size_guard(self):
        with pytest.raises(ValueError):
            init_register(0)
        with pytest.raises(ValueError):
            init_register(MAX_QUBITS + 1)


class TestHadamard:
    def test_h_on_zero(self):
        reg = apply_hadamard(init_register(1), 0)
        np.testing.assert_allclose(reg.amplitudes, [INV_SQRT2, INV_SQRT2],
                                   atol=1e-15)

    def test_involution_on_zero(self):
        reg = apply_hadamard(apply_hadamard(init_register(1), 0), 0)
        np.testing.assert_allclose(reg.amplitudes, [1.0, 0.0], atol=1e-12)

    def test_h_both_qubits_of_00(self):
        reg = init_register(2)
        apply_hadamard(reg, 0)
        apply_hadamard(reg, 1)
        np.testing.assert_allclose(reg.amplitudes, [0.5] * 4, atol=1e-15)

    def test_qubit_out_of_range(self):
        reg = init_register(2)
        with pytest.raises(ValueError):
            apply_hadamard(reg, 2)
        with pytest.raises(ValueError):
            apply_hadamard(reg, -1)

    def test_uniform_superposition_up_to_ten_qubits(self):
        for n in range(1, 11):
            reg = init_register(n)
            for q in range(n):
                apply_hadamard(reg, q)
            np.testing.assert_allclose(reg.amplitudes, 2 ** (-n / 2),
                                       atol=1e-12)

    def test_norm_preserved_over_random_sequences(self):
        rng = np.random.default_rng(42)
        for _ in range(10_000):
            n = int(rng.integers(1, 7))
            reg = random_register(rng, n)
            for q in rng.integers(0, n, size=4):
                apply_hadamard(reg, int(q))
            assert abs(reg.norm_sq() - 1.0) < 1e-12

    def test_involution_on_random_registers(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            n = int(rng.integers(1, 7))
            reg = random_register(rng, n)
            before = reg.amplitudes.copy()
            q = int(rng.integers(0, n))
            apply_hadamard(apply_hadamard(reg, q), q)
            np.testing.assert_allclose(reg.amplitudes, before, atol=1e-12)


class TestMeasureAll:
    def test_deterministic_state(self):
        reg = init_register(3)
        bits = measure_all(reg, ClassicalSource(0))
        assert bits == [0, 0, 0]
        np.testing.assert_array_equal(reg.amplitudes,
                                      init_register(3).amplitudes)

    def test_collapse_leaves_one_unit_amplitude(self):
        entropy = ClassicalSource(31)
        for _ in range(50):
            reg = init_register(3)
            for q in range(3):
                apply_hadamard(reg, q)
            bits = measure_all(reg, entropy)
            mags = np.abs(reg.amplitudes)
            assert np.count_nonzero(mags == 1.0) == 1
            outcome = int(np.argmax(mags))
            assert bits == [(outcome >> q) & 1 for q in range(3)]

    def test_plus_state_frequency(self):
        entropy = ClassicalSource(202)
        ones = 0
        shots = 100_000
        for _ in range(shots):
            reg = apply_hadamard(init_register(1), 0)
            ones += measure_all(reg, entropy)[0]
        assert 0.49 <= ones / shots <= 0.51

    def test_inverse_cdf_uses_single_draw(self):
        # u = 0.6 on |+> lands in the second half of the CDF -> outcome 1
        reg = apply_hadamard(init_register(1), 0)
        assert measure_all(reg, ScriptedSource([0.6])) == [1]
        reg = apply_hadamard(init_register(1), 0)
        assert measure_all(reg, ScriptedSource([0.4])) == [0]

    def test_distribution_matches_amplitude_squares(self):
        rng = np.random.default_rng(11)
        reg0 = random_register(rng, 4)
        probs = np.abs(reg0.amplitudes) ** 2
        entropy = ClassicalSource(77)
        counts = np.zeros(16)
        shots = 100_000
        for _ in range(shots):
            reg = init_register(4)
            reg.amplitudes[:] = reg0.amplitudes
            outcome = measure_all(reg, entropy)
            counts[sum(b << q for q, b in enumerate(outcome))] += 1
        expected = probs * shots
        chi2 = float(np.sum((counts - expected) ** 2 / expected))
        assert chi2 < CHI2_CRIT_DF15


class TestSampleBits:
    def test_single_bit(self):
        bits = sample_bits(1, ClassicalSource(0))
        assert bits in ([0], [1])

    def test_thirty_two_bits_form_an_integer(self):
        bits = sample_bits(32, ClassicalSource(5))
        assert len(bits) == 32
        assert set(bits) <= {0, 1}
        value = sum(b << i for i, b in enumerate(bits))
        assert 0 <= value < 2**32

    def test_shot_batching_consumes_one_draw_per_shot(self):
        counter = CountingSource(ClassicalSource(1))
        sample_bits(40, counter, shot_qubits=8)
        assert counter.calls == 5
        counter = CountingSource(ClassicalSource(1))
        sample_bits(3, counter, shot_qubits=8)
        assert counter.calls == 1

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_bits(0, ClassicalSource(0))
        with pytest.raises(ValueError):
            sample_bits(8, ClassicalSource(0), shot_qubits=0)
        with pytest.raises(ValueError):
            sample_bits(8, ClassicalSource(0), shot_qubits=MAX_QUBITS + 1)
