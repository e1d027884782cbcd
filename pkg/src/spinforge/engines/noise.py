"""Control-noise modeling and resilience checks.

Programming an Ising model onto analog hardware perturbs its coefficients:
systematic offsets plus Gaussian spread on biases and couplers. apply_noise
produces the perturbed model; resilience_check asks whether the perturbation
moved any true ground state out of the ground subspace.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.bruteforce import brute_force
from ..core.models import IsingModel
from ..errors import InputError
from ..rng import substream

__all__ = ["NoiseModel", "apply_noise", "resilience_check"]


@dataclass(frozen=True)
class NoiseModel:
    sigma_h: float = 0.0
    sigma_j: float = 0.0
    delta_h: float = 0.0
    delta_j: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.sigma_h < 0 or self.sigma_j < 0:
            raise InputError("noise widths must be non-negative")


def apply_noise(m: IsingModel, nm: NoiseModel) -> IsingModel:
    """Perturb coefficients: h' = h + delta_h + N(0, sigma_h), same for J.

    Only programmed couplers are perturbed; absent couplings stay absent.
    Gaussian draws come from the (seed, "noise") substream: first the biases
    as one vector, then couplers in sorted key order, so results are
    reproducible. All-zero noise returns the coefficients untouched.
    """
    gen = substream(nm.seed, "noise")
    if nm.sigma_h == 0.0 and nm.delta_h == 0.0:
        h = m.linear
    else:
        h = m.linear + nm.delta_h
        if nm.sigma_h > 0.0:
            h = h + nm.sigma_h * gen.standard_normal(m.num_spins)
    if nm.sigma_j == 0.0 and nm.delta_j == 0.0:
        J = dict(m.quadratic)
    else:
        keys = sorted(m.quadratic)
        draws = gen.standard_normal(len(keys)) if nm.sigma_j > 0.0 else np.zeros(len(keys))
        J = {
            key: m.quadratic[key] + nm.delta_j + nm.sigma_j * draws[idx]
            for idx, key in enumerate(keys)
        }
    return IsingModel(h, J, m.offset)


def resilience_check(original: IsingModel, noisy: IsingModel,
                     cap: int = 24, tol: float = 1e-9) -> bool:
    """True iff every ground state of original is still a ground state of noisy."""
    if original.num_spins != noisy.num_spins:
        raise InputError("models must have the same number of spins")
    gs_original = brute_force(original, cap=cap, tol=tol)
    gs_noisy = brute_force(noisy, cap=cap, tol=tol)
    energies = noisy.evaluate_batch(gs_original.states)
    return bool(np.all(energies <= gs_noisy.min_energy + tol))
