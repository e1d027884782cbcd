"""Effective-temperature estimator against the exact-enumeration sampler."""

import numpy as np
import pytest

from spinforge.core import IsingModel, SampleSet
from spinforge.engines import (
    BoltzmannSpec,
    estimate_effective_temperature,
    exact_boltzmann_sample,
)
from spinforge.errors import InputError

from conftest import random_ising_coeffs


def spec_and_model(seed, n=8):
    rng = np.random.default_rng(seed)
    linear, quadratic, _ = random_ising_coeffs(rng, n, density=0.6)
    spec = BoltzmannSpec(biases=linear, weights=quadratic)
    return spec, IsingModel(linear, quadratic)


class TestRecovery:
    def test_beta_recovered_within_five_percent(self):
        spec, model = spec_and_model(31)
        samples = exact_boltzmann_sample(model, beta=1.0, reads=100_000, seed=8)
        est = estimate_effective_temperature(samples, spec)
        assert est.t_eff == pytest.approx(1.0, rel=0.05)
        assert est.std_error > 0

    @pytest.mark.parametrize("beta", [0.5, 2.0])
    def test_other_temperatures(self, beta):
        spec, model = spec_and_model(32)
        samples = exact_boltzmann_sample(model, beta=beta, reads=100_000, seed=9)
        est = estimate_effective_temperature(samples, spec)
        assert est.t_eff == pytest.approx(1.0 / beta, rel=0.05)


class TestEnergyScaleCovariance:
    def test_estimate_scales_linearly_with_model_scale(self):
        # scaling (W, b) by c scales energies by c, so the fitted slope
        # scales by 1/c and the temperature estimate by c
        spec, model = spec_and_model(33)
        samples = exact_boltzmann_sample(model, beta=1.0, reads=20_000, seed=10)
        base = estimate_effective_temperature(samples, spec)
        for c in (2.0, 0.25, 7.5):
            scaled = estimate_effective_temperature(samples, spec.scaled(c))
            assert scaled.t_eff == pytest.approx(c * base.t_eff, rel=1e-6)


class TestDegenerateInput:
    def test_single_energy_level_rejected(self):
        spec, _ = spec_and_model(34, n=3)
        same = np.array([[1, 1, 1], [1, 1, 1]], dtype=np.int8)
        ss = SampleSet(
            domain="spin",
            assignments=same,
            energies=spec.energy_model().evaluate_batch(same),
            counts=np.array([1, 1]),
        )
        with pytest.raises(InputError):
            estimate_effective_temperature(ss, spec)

    def test_width_mismatch(self):
        spec, _ = spec_and_model(35, n=4)
        ss = SampleSet(
            domain="spin",
            assignments=np.array([[1, -1]], dtype=np.int8),
            energies=np.array([0.0]),
            counts=np.array([1]),
        )
        with pytest.raises(InputError):
            estimate_effective_temperature(ss, spec)
