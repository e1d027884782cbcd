"""Fixed-temperature Boltzmann sampling and small-system exact references.

The sampler is a single Metropolis chain targeting P(s) ∝ exp(-beta * E(s)):
burn-in sweeps first, then one recorded state every ``thin`` sweeps. The
partition function is never computed by the sampler; the enumeration-based
helpers below provide exact distributions for small models so tests can
measure sampling fidelity.
"""

from __future__ import annotations

import numpy as np

from ..backend import kernels
from ..core.bruteforce import all_energies
from ..core.models import IsingModel, QuboModel, adjacency_csr
from ..core.samples import SampleSet
from ..errors import InputError
from ..rng import random_spins, substream

__all__ = [
    "boltzmann_sample",
    "exact_boltzmann_probabilities",
    "exact_boltzmann_sample",
    "empirical_state_probabilities",
    "tv_distance",
]

_CHUNK_SAMPLES = 1 << 14


def boltzmann_sample(model: IsingModel, beta: float, reads: int, sweeps: int,
                     seed: int = 0, thin: int = 1) -> SampleSet:
    """Metropolis samples approximating the Boltzmann distribution at beta.

    ``sweeps`` is the burn-in; ``thin`` full sweeps separate successive
    recorded states. Deterministic given the seed (the chain is sequential by
    nature, so worker count plays no role here).
    """
    if beta <= 0:
        raise InputError("beta must be positive")
    if reads < 1:
        raise InputError("reads must be >= 1")
    if sweeps < 0:
        raise InputError("burn-in sweeps must be >= 0")
    if thin < 1:
        raise InputError("thin must be >= 1")
    n = model.num_spins
    if n < 1:
        raise InputError("model has no spins")

    indptr, indices, data = adjacency_csr(model)
    gen = substream(seed, "boltzmann")
    state = random_spins(gen, n)

    if sweeps:
        scratch = np.empty((1, n), dtype=np.int8)
        uniforms = gen.random(2 * sweeps * n)
        kernels.metropolis_chain(model.linear, indptr, indices, data, float(beta),
                                 uniforms, state, sweeps, scratch)

    assignments = np.empty((reads, n), dtype=np.int8)
    done = 0
    while done < reads:
        block = min(_CHUNK_SAMPLES, reads - done)
        uniforms = gen.random(2 * block * thin * n)
        kernels.metropolis_chain(model.linear, indptr, indices, data, float(beta),
                                 uniforms, state, thin,
                                 assignments[done:done + block])
        done += block

    return SampleSet(
        domain="spin",
        assignments=assignments,
        energies=model.evaluate_batch(assignments),
        counts=np.ones(reads, dtype=np.int64),
        provenance={
            "engine": "boltzmann",
            "seed": int(seed),
            "beta": float(beta),
            "reads": reads,
            "burn_in": sweeps,
            "thin": thin,
        },
    )


def exact_boltzmann_probabilities(model: IsingModel | QuboModel, beta: float) -> np.ndarray:
    """P(state) for every assignment index, by exhaustive enumeration."""
    if beta <= 0:
        raise InputError("beta must be positive")
    energies = all_energies(model)
    logits = -beta * (energies - energies.min())
    weights = np.exp(logits)
    return weights / weights.sum()


def exact_boltzmann_sample(model: IsingModel, beta: float, reads: int,
                           seed: int = 0) -> SampleSet:
    """Independent exact draws from the enumerated distribution (oracle sampler)."""
    probs = exact_boltzmann_probabilities(model, beta)
    gen = substream(seed, "exact-boltzmann")
    n = model.num_spins
    idx = gen.choice(len(probs), size=reads, p=probs)
    shifts = np.arange(n, dtype=np.uint64)
    bits = ((idx.astype(np.uint64)[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int8)
    spins = (2 * bits - 1).astype(np.int8)
    return SampleSet(
        domain="spin",
        assignments=spins,
        energies=model.evaluate_batch(spins),
        counts=np.ones(reads, dtype=np.int64),
        provenance={"engine": "exact-boltzmann", "seed": int(seed), "beta": float(beta)},
    )


def empirical_state_probabilities(samples: SampleSet) -> np.ndarray:
    """Empirical distribution over assignment indices (little-endian bits)."""
    n = samples.num_vars
    bits = (samples.assignments > 0).astype(np.uint64) if samples.domain == "spin" \
        else samples.assignments.astype(np.uint64)
    idx = (bits << np.arange(n, dtype=np.uint64)[np.newaxis, :]).sum(axis=1)
    out = np.zeros(1 << n)
    np.add.at(out, idx.astype(np.int64), samples.counts.astype(np.float64))
    return out / out.sum()


def tv_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Total variation distance between two distributions on the same support."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise InputError("distributions must share a support")
    return 0.5 * float(np.abs(p - q).sum())
