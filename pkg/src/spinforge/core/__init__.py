"""Canonical problem representations and exact reference operations."""

from .bruteforce import GroundStates, all_energies, brute_force
from .convert import bits_to_spins, ising_to_qubo, poly_to_qubo, qubo_to_ising, spins_to_bits
from .gauge import Gauge, apply_gauge, decode_gauge
from .models import IsingModel, QuboModel, adjacency_csr
from .poly import PolyBuilder, PolyObjective
from .reduce import reduce_degree
from .samples import SampleSet

__all__ = [
    "PolyObjective",
    "PolyBuilder",
    "QuboModel",
    "IsingModel",
    "SampleSet",
    "Gauge",
    "adjacency_csr",
    "qubo_to_ising",
    "ising_to_qubo",
    "poly_to_qubo",
    "spins_to_bits",
    "bits_to_spins",
    "reduce_degree",
    "apply_gauge",
    "decode_gauge",
    "brute_force",
    "all_energies",
    "GroundStates",
]
