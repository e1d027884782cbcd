"""Simulated quantum annealing: path-integral Monte Carlo over Trotter replicas.

The driver term of the anneal Hamiltonian is emulated classically by P
replicas ("slices") of the spin system coupled ferromagnetically along a
periodic imaginary-time ring. At anneal fraction s the replica coupling
follows the Suzuki-Trotter expression

    J_perp(s) = -(P * T_sim / 2) * ln tanh(A(s) / (P * T_sim))  >= 0,

entering the replica energy as -J_perp * s_up * s_down: weak coupling while
the driver A dominates, diverging (replicas lock) as A -> 0. A(s) == 0 is
taken as zero coupling, which makes the replicas exactly independent thermal
chains; with P == 1 the engine degenerates to a plain thermal anneal under
B(s) * H1 at T_sim. Acceptance uses the fixed simulation temperature T_sim
with each replica carrying the full problem Hamiltonian scaled by B(s).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..backend import kernels
from ..core.models import IsingModel, adjacency_csr
from ..core.samples import SampleSet
from ..errors import InputError, SolverError
from ..parallel import parallel_map
from ..rng import random_spins, substream
from .schedule import AnnealSchedule

__all__ = ["SqaParams", "simulated_quantum_annealing", "slice_couplings"]


@dataclass(frozen=True)
class SqaParams:
    num_reads: int = 100
    sweeps: int = 1000
    trotter_slices: int = 16
    t_sim: float = 0.05
    schedule: AnnealSchedule = field(default_factory=AnnealSchedule.default)
    seed: int = 0

    def __post_init__(self):
        if self.num_reads < 1:
            raise InputError("num_reads must be >= 1")
        if self.sweeps < 1:
            raise InputError("sweeps must be >= 1")
        if self.trotter_slices < 1:
            raise InputError("trotter_slices must be >= 1")
        if self.t_sim <= 0:
            raise InputError("t_sim must be positive")


def slice_couplings(a_values: np.ndarray, trotter_slices: int, t_sim: float) -> np.ndarray:
    """Replica-coupling coefficients (<= 0) for each sweep's driver weight.

    Returns the signed coupling placed on intra-replica-ring bonds, i.e.
    -J_perp; raises if any finite positive driver weight produces a
    non-finite value (driver too small for the discretization).
    """
    a_values = np.asarray(a_values, dtype=np.float64)
    if trotter_slices == 1:
        return np.zeros_like(a_values)
    scale = trotter_slices * t_sim
    out = np.zeros_like(a_values)
    positive = a_values > 0.0
    with np.errstate(divide="ignore", over="ignore"):
        out[positive] = (scale / 2.0) * np.log(np.tanh(a_values[positive] / scale))
    if not np.isfinite(out).all():
        bad = a_values[~np.isfinite(out)][0]
        raise SolverError(
            f"non-finite replica coupling for driver weight A={bad:g} with "
            f"P={trotter_slices}, T_sim={t_sim:g}; increase A, P, or T_sim")
    return out


def simulated_quantum_annealing(model: IsingModel, params: SqaParams,
                                workers: int | None = None) -> SampleSet:
    n = model.num_spins
    if n < 1:
        raise InputError("model has no spins")
    indptr, indices, data = adjacency_csr(model)

    sweeps = params.sweeps
    s_grid = np.linspace(0.0, 1.0, sweeps) if sweeps > 1 else np.array([1.0])
    a_values, b_values = params.schedule.interpolate(s_grid)
    jcoef = slice_couplings(a_values, params.trotter_slices, params.t_sim)
    bcoef = np.ascontiguousarray(b_values)
    beta_sim = 1.0 / params.t_sim
    num_slices = params.trotter_slices

    def one_read(read: int) -> np.ndarray:
        gen = substream(params.seed, "sqa", read)
        order = gen.permutation(n).astype(np.int64)
        states = random_spins(gen, num_slices * n).reshape(num_slices, n)
        uniforms = gen.random(sweeps * num_slices * n)
        kernels.sqa_run(model.linear, indptr, indices, data, bcoef, jcoef,
                        beta_sim, order, uniforms, states)
        slice_energies = model.evaluate_batch(states)
        return states[int(np.argmin(slice_energies))]

    states = np.array(parallel_map(one_read, range(params.num_reads), workers), dtype=np.int8)
    energies = model.evaluate_batch(states)
    origins = np.column_stack([
        np.zeros(params.num_reads, dtype=np.int64),
        np.arange(params.num_reads, dtype=np.int64),
    ])
    return SampleSet(
        domain="spin",
        assignments=states,
        energies=energies,
        counts=np.ones(params.num_reads, dtype=np.int64),
        provenance={
            "engine": "sqa",
            "seed": int(params.seed),
            "num_reads": params.num_reads,
            "sweeps": params.sweeps,
            "trotter_slices": params.trotter_slices,
            "t_sim": params.t_sim,
        },
        origins=origins,
    )
