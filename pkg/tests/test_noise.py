"""Control-noise application and resilience."""

import numpy as np
import pytest
from scipy import stats

from spinforge.core import IsingModel
from spinforge.engines import NoiseModel, apply_noise, resilience_check
from spinforge.errors import CapacityError, InputError

from conftest import random_ising_coeffs


class TestApplyNoise:
    def test_zero_noise_is_identity(self):
        m = IsingModel([0.3, -0.2], {(0, 1): 0.9}, offset=1.0)
        out = apply_noise(m, NoiseModel())
        assert out == m

    def test_offset_shift(self):
        m = IsingModel([1.0])
        out = apply_noise(m, NoiseModel(delta_h=-0.5))
        assert out.linear[0] == 0.5

    def test_sparsity_preserved(self):
        m = IsingModel(np.zeros(4), {(0, 1): 1.0, (2, 3): -1.0})
        out = apply_noise(m, NoiseModel(sigma_j=0.1, delta_j=0.05, seed=3))
        assert set(out.quadratic) == {(0, 1), (2, 3)}

    def test_deterministic_given_seed(self):
        m = IsingModel([1.0, -1.0], {(0, 1): 0.5})
        nm = NoiseModel(sigma_h=0.3, sigma_j=0.2, seed=11)
        assert apply_noise(m, nm) == apply_noise(m, nm)

    def test_negative_sigma_rejected(self):
        with pytest.raises(InputError):
            NoiseModel(sigma_h=-1.0)

    def test_gaussian_flip_rate_single_spin(self):
        # h = 1 with sigma_h = 2: ground state flips iff h' < 0,
        # so the flip rate is Phi(-1/2)
        m = IsingModel([1.0])
        flips = 0
        trials = 10000
        for seed in range(10000, 10000 + trials):
            noisy = apply_noise(m, NoiseModel(sigma_h=2.0, seed=seed))
            flips += noisy.linear[0] < 0
        expected = stats.norm.cdf(-0.5)
        assert flips / trials == pytest.approx(expected, rel=0.02)


class TestResilience:
    def test_unperturbed_is_resilient(self):
        rng = np.random.default_rng(71)
        linear, quadratic, offset = random_ising_coeffs(rng, 8)
        m = IsingModel(linear, quadratic, offset)
        assert resilience_check(m, m)

    def test_sign_flip_breaks_resilience(self):
        assert not resilience_check(IsingModel([1.0]), IsingModel([-0.1]))

    def test_small_offset_keeps_resilience(self):
        assert resilience_check(IsingModel([1.0]), IsingModel([0.5]))

    def test_size_mismatch(self):
        with pytest.raises(InputError):
            resilience_check(IsingModel([1.0]), IsingModel([1.0, 1.0]))

    def test_capacity(self):
        big = IsingModel(np.ones(25))
        with pytest.raises(CapacityError):
            resilience_check(big, big)

    def test_resilient_fraction_decreases_with_sigma(self):
        rng = np.random.default_rng(72)
        linear, quadratic, offset = random_ising_coeffs(rng, 10, density=0.4)
        m = IsingModel(linear, quadratic, offset)
        fractions = []
        for sigma in (0.01, 0.2, 0.8):
            ok = sum(
                resilience_check(m, apply_noise(m, NoiseModel(sigma_h=sigma, sigma_j=sigma, seed=s)))
                for s in range(40)
            )
            fractions.append(ok / 40)
        assert fractions[0] >= fractions[1] >= fractions[2]
