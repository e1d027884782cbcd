"""Solvers and samplers over Ising models."""

from .boltzmann import (
    boltzmann_sample,
    empirical_state_probabilities,
    exact_boltzmann_probabilities,
    exact_boltzmann_sample,
    tv_distance,
)
from .noise import NoiseModel, apply_noise, resilience_check
from .sa import SaParams, anneal_reads, simulated_annealing
from .schedule import AnnealSchedule
from .sqa import SqaParams, simulated_quantum_annealing, slice_couplings
from .teff import BoltzmannSpec, TeffEstimate, estimate_effective_temperature

__all__ = [
    "AnnealSchedule",
    "SaParams",
    "SqaParams",
    "NoiseModel",
    "BoltzmannSpec",
    "TeffEstimate",
    "simulated_annealing",
    "anneal_reads",
    "simulated_quantum_annealing",
    "slice_couplings",
    "boltzmann_sample",
    "exact_boltzmann_probabilities",
    "exact_boltzmann_sample",
    "empirical_state_probabilities",
    "tv_distance",
    "estimate_effective_temperature",
    "NoiseModel",
    "apply_noise",
    "resilience_check",
]
