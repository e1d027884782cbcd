"""Building the embedded (physical) Ising model and decoding its samples.

Given a logical model and an embedding, the physical model places:

* each logical bias h_i split evenly over chain(i)'s members,
* each logical coupling J_ij on exactly one physical edge between the two
  chains (the lowest canonical edge),
* the chain coupling J_F < 0 on a spanning tree of each chain.

With all chains uniform, physical energy = logical energy
+ J_F * (number of intra-chain tree edges): the spanning-tree choice makes
that bookkeeping constant exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.models import IsingModel
from ..core.samples import SampleSet
from ..errors import EmbeddingError, InputError
from ..rng import substream
from .embedding import Embedding

__all__ = ["EmbeddedIsing", "embed_ising", "unembed", "suggest_chain_strength"]


@dataclass(frozen=True)
class EmbeddedIsing:
    physical: IsingModel
    nodes: tuple[int, ...]            # dense physical index -> hardware node id
    embedding: Embedding
    logical: IsingModel
    chain_strength: float             # J_F
    num_chain_edges: int              # spanning-tree edges carrying J_F

    @property
    def chain_offset(self) -> float:
        """Energy the chains add to every chain-consistent state."""
        return self.chain_strength * self.num_chain_edges

    def dense_index(self) -> dict[int, int]:
        return {node: idx for idx, node in enumerate(self.nodes)}


def _spanning_tree_edges(chain: tuple[int, ...], adjacency) -> list[tuple[int, int]]:
    """BFS tree of the chain's induced subgraph, rooted at the lowest node."""
    members = set(chain)
    root = chain[0]
    seen = {root}
    frontier = [root]
    edges: list[tuple[int, int]] = []
    while frontier:
        nxt: list[int] = []
        for q in frontier:
            for w in adjacency[q]:
                if w in members and w not in seen:
                    seen.add(w)
                    edges.append((q, w) if q < w else (w, q))
                    nxt.append(w)
        frontier = nxt
    return sorted(edges)


def embed_ising(logical: IsingModel, emb: Embedding, j_f: float) -> EmbeddedIsing:
    """Compile a logical Ising model onto hardware through an embedding."""
    if j_f >= 0:
        raise InputError("chain coupling J_F must be negative")
    missing = [v for v in range(logical.num_spins) if v not in emb.chains]
    if missing:
        raise InputError(f"embedding lacks chains for logical variables {missing}")

    nodes = tuple(sorted(q for chain in emb.chains.values() for q in chain))
    dense = {node: idx for idx, node in enumerate(nodes)}
    adjacency = emb.hardware.adjacency

    h = np.zeros(len(nodes))
    for var in range(logical.num_spins):
        chain = emb.chains[var]
        share = logical.linear[var] / len(chain)
        for q in chain:
            h[dense[q]] += share

    quadratic: dict[tuple[int, int], float] = {}
    for (i, j), coupling in sorted(logical.quadratic.items()):
        options = emb.connecting_edges(i, j)
        if not options:
            raise EmbeddingError(f"no physical edge hosts logical coupling ({i},{j})")
        u, v = options[0]
        key = (dense[u], dense[v])
        quadratic[key] = quadratic.get(key, 0.0) + coupling

    num_chain_edges = 0
    for var in sorted(emb.chains):
        for u, v in _spanning_tree_edges(emb.chains[var], adjacency):
            key = (dense[u], dense[v])
            quadratic[key] = quadratic.get(key, 0.0) + j_f
            num_chain_edges += 1

    physical = IsingModel(h, quadratic, logical.offset)
    return EmbeddedIsing(
        physical=physical,
        nodes=nodes,
        embedding=emb,
        logical=logical,
        chain_strength=float(j_f),
        num_chain_edges=num_chain_edges,
    )


def suggest_chain_strength(logical: IsingModel, emb: Embedding, alpha: float = 1.5) -> float:
    """Heuristic starting point J_F = -alpha * max(|h|, |J|).

    Too weak lets chains break; too strong freezes them early — there is a
    problem-dependent sweet spot, so treat this as a first guess, not an
    optimum.
    """
    if alpha <= 0:
        raise InputError("alpha must be positive")
    peak = logical.max_coefficient()
    if peak == 0.0:
        raise InputError("cannot size chain coupling for an all-zero model")
    return -alpha * peak


def unembed(samples: SampleSet, embedded: EmbeddedIsing, strategy: str = "majority",
            seed: int = 0) -> SampleSet:
    """Decode physical samples to logical ones.

    Uniform chains take their common value. Broken chains are handled per
    strategy: "discard" drops the whole read; "majority" takes the chain
    majority with a seeded coin for exact ties (deterministic given the
    seed). Logical energies are re-evaluated under the logical model, and the
    broken-chain rate is reported in provenance as chain incidents over
    (reads x chains).
    """
    if strategy not in ("discard", "majority"):
        raise InputError(f"unknown chain-repair strategy {strategy!r}")
    if samples.domain != "spin":
        raise InputError("expected spin-domain physical samples")
    if samples.num_vars != len(embedded.nodes):
        raise InputError(
            f"sample width {samples.num_vars} != physical size {len(embedded.nodes)}")

    emb = embedded.embedding
    logical_vars = sorted(emb.chains)
    dense = embedded.dense_index()
    chain_cols = {v: np.array([dense[q] for q in emb.chains[v]]) for v in logical_vars}

    rng = substream(seed, "unembed")
    decoded_rows: list[np.ndarray] = []
    kept_counts: list[int] = []
    kept_origins: list[np.ndarray] = []
    broken_incidents = 0
    for idx in range(len(samples)):
        row = samples.assignments[idx]
        out = np.zeros(len(logical_vars), dtype=np.int8)
        drop = False
        for var in logical_vars:
            values = row[chain_cols[var]]
            total = int(values.sum())
            if abs(total) == len(values):
                out[var] = values[0]
                continue
            broken_incidents += 1
            if strategy == "discard":
                drop = True
                continue
            if total > 0:
                out[var] = 1
            elif total < 0:
                out[var] = -1
            else:
                out[var] = 1 if rng.random() < 0.5 else -1
        if drop:
            continue
        decoded_rows.append(out)
        kept_counts.append(int(samples.counts[idx]))
        if samples.origins is not None:
            kept_origins.append(samples.origins[idx])

    n_logical = len(logical_vars)
    decoded = np.array(decoded_rows, dtype=np.int8).reshape(len(decoded_rows), n_logical)
    provenance = dict(samples.provenance)
    provenance.update({
        "unembed_strategy": strategy,
        "chain_break_fraction": broken_incidents / (len(samples) * n_logical) if len(samples) else 0.0,
        "reads_discarded": len(samples) - len(decoded_rows),
    })
    return SampleSet(
        domain="spin",
        assignments=decoded,
        energies=embedded.logical.evaluate_batch(decoded) if len(decoded_rows)
        else np.zeros(0),
        counts=np.array(kept_counts, dtype=np.int64),
        provenance=provenance,
        origins=np.array(kept_origins, dtype=np.int64) if kept_origins else None,
    )
