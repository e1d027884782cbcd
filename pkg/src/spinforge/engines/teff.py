"""Effective-temperature estimation from sampled states.

A sampler tuned by control parameters J = T_eff * W, h = T_eff * b realizes a
Boltzmann distribution over the probabilistic-model energy
E_W(s) = sum W_ij s_i s_j + sum b_i s_i at an instance-dependent temperature
T_eff. Given samples and (W, b), the estimator inverts the exponential form
pairwise: for populated energy levels a, b,

    ln(count_a / count_b) ≈ -(E_a - E_b) / T_eff,

fit by weighted least squares through the origin over all level pairs, with
weight min(count_a, count_b) per pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ..core.models import IsingModel
from ..core.samples import SampleSet
from ..errors import InputError

__all__ = ["BoltzmannSpec", "TeffEstimate", "estimate_effective_temperature"]


@dataclass(frozen=True)
class BoltzmannSpec:
    """Probabilistic-model parameters (W, b), optionally with inverse temperature."""

    biases: np.ndarray
    weights: Mapping[tuple[int, int], float]
    beta: float | None = None

    def __post_init__(self):
        model = IsingModel(self.biases, dict(self.weights))
        if self.beta is not None and self.beta <= 0:
            raise InputError("beta must be positive when given")
        object.__setattr__(self, "biases", model.linear)
        object.__setattr__(self, "weights", model.quadratic)

    @property
    def num_units(self) -> int:
        return len(self.biases)

    def energy_model(self) -> IsingModel:
        """E_W as an offset-free Ising model."""
        return IsingModel(self.biases, dict(self.weights))

    def scaled(self, factor: float) -> "BoltzmannSpec":
        return BoltzmannSpec(
            biases=self.biases * factor,
            weights={k: v * factor for k, v in self.weights.items()},
            beta=self.beta,
        )


@dataclass(frozen=True)
class TeffEstimate:
    t_eff: float
    beta: float
    std_error: float        # delta-method standard error of t_eff
    num_levels: int
    num_pairs: int


def estimate_effective_temperature(samples: SampleSet, spec: BoltzmannSpec) -> TeffEstimate:
    """Estimate T_eff by pairwise log-ratio regression over energy levels."""
    if samples.domain != "spin":
        raise InputError("expected spin-domain samples")
    if samples.num_vars != spec.num_units:
        raise InputError(
            f"sample width {samples.num_vars} != model size {spec.num_units}")
    if not len(samples):
        raise InputError("empty sample set")

    energies = spec.energy_model().evaluate_batch(samples.assignments)
    levels, inverse = np.unique(energies, return_inverse=True)
    counts = np.bincount(inverse, weights=samples.counts.astype(np.float64))
    if len(levels) < 2:
        raise InputError("samples populate a single energy level; cannot regress")

    ia, ib = np.triu_indices(len(levels), k=1)
    x = -(levels[ia] - levels[ib])
    y = np.log(counts[ia] / counts[ib])
    w = np.minimum(counts[ia], counts[ib])

    sxx = float(np.sum(w * x * x))
    if sxx == 0.0:
        raise InputError("energy levels are numerically indistinguishable")
    beta_hat = float(np.sum(w * x * y)) / sxx
    residuals = y - beta_hat * x
    num_pairs = len(x)
    if num_pairs > 1:
        var_beta = float(np.sum(w * residuals * residuals)) / ((num_pairs - 1) * sxx)
        se_beta = np.sqrt(var_beta)
    else:
        se_beta = float("nan")
    if beta_hat == 0.0:
        raise InputError("regressed inverse temperature is zero")
    t_eff = 1.0 / beta_hat
    return TeffEstimate(
        t_eff=t_eff,
        beta=beta_hat,
        std_error=float(se_beta / (beta_hat * beta_hat)),
        num_levels=len(levels),
        num_pairs=num_pairs,
    )
