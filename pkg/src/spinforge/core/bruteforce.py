"""Exhaustive enumeration oracle.

Everything else in the package is ultimately verified against this module:
it enumerates all 2**n assignments of a small model and reports the exact
minimum and the complete, deterministically ordered ground-state list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..backend import kernels
from ..errors import CapacityError, InputError
from .convert import qubo_to_ising
from .models import IsingModel, QuboModel, adjacency_csr

__all__ = ["brute_force", "all_energies", "GroundStates", "BRUTE_FORCE_CAP"]

BRUTE_FORCE_CAP = 24
ALL_ENERGIES_CAP = 20


@dataclass(frozen=True)
class GroundStates:
    """Exact minimum and every minimizing assignment (ascending index order)."""

    min_energy: float
    states: np.ndarray  # (num_ground, n) int8, in the model's own domain
    domain: str

    def __iter__(self):
        yield self.min_energy
        yield self.states

    @property
    def count(self) -> int:
        return self.states.shape[0]


def _index_bits(indices: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n, dtype=np.uint64)
    return ((indices.astype(np.uint64)[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int8)


def brute_force(model: QuboModel | IsingModel, cap: int = BRUTE_FORCE_CAP,
                tol: float = 1e-9) -> GroundStates:
    """Exact global minimum of a small model.

    The backend scan walks all 2**n states and returns a candidate superset;
    candidates are then re-evaluated exactly under the original model, so the
    reported minimum carries no incremental-update rounding. Ground states are
    listed in ascending assignment-index order (bit k of the index is x_k).
    """
    n = model.num_vars
    if n < 1:
        raise InputError("model has no variables")
    if n > cap:
        raise CapacityError(f"{n} variables exceeds the exhaustive cap of {cap}")

    is_qubo = isinstance(model, QuboModel)
    spin_model = qubo_to_ising(model) if is_qubo else model
    indptr, indices, data = adjacency_csr(spin_model)
    scale = float(np.abs(spin_model.linear).sum() + sum(abs(v) for v in spin_model.quadratic.values()))
    guard = 2.0 * tol + 1e-12 * (1.0 + scale)
    _, candidates = kernels.bruteforce_scan(spin_model.linear, indptr, indices, data, n, guard)

    bits = _index_bits(candidates, n)
    assignments = bits if is_qubo else (2 * bits - 1).astype(np.int8)
    energies = model.evaluate_batch(assignments)
    lowest = float(energies.min())
    mask = energies <= lowest + tol
    keep = np.sort(candidates[mask])
    states = _index_bits(keep, n)
    if not is_qubo:
        states = (2 * states - 1).astype(np.int8)
    return GroundStates(min_energy=lowest, states=states,
                        domain="binary" if is_qubo else "spin")


def all_energies(model: QuboModel | IsingModel, cap: int = ALL_ENERGIES_CAP) -> np.ndarray:
    """Energies of every assignment, indexed by little-endian bit pattern."""
    n = model.num_vars
    if n < 1:
        raise InputError("model has no variables")
    if n > cap:
        raise CapacityError(f"{n} variables exceeds the spectrum cap of {cap}")
    total = 1 << n
    out = np.empty(total)
    is_qubo = isinstance(model, QuboModel)
    chunk = min(total, 1 << 16)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        bits = _index_bits(idx, n)
        arr = bits if is_qubo else (2 * bits - 1).astype(np.int8)
        out[start:start + len(idx)] = model.evaluate_batch(arr)
    return out
