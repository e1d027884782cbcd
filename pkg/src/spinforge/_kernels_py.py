"""Pure-Python fallback kernels.

Line-for-line mirror of the compiled extension in ``_kernels.pyx``: same
arithmetic, same evaluation order, same libm calls, and the same number of
uniforms consumed per proposal, so the two backends emit bit-identical
samples. The Metropolis loops run in interpreted Python and are only meant to
keep the package functional when the extension cannot be built; the
enumeration scan falls back to chunked numpy instead (its contract is a
candidate superset, not a bitwise-equal walk).
"""

from __future__ import annotations

from math import exp

import numpy as np


def sa_run(h, indptr, indices, data, betas, order, uniforms, state) -> None:
    """One annealing read: single-spin-flip Metropolis over the beta ladder.

    ``state`` (int8, ±1) is updated in place. One uniform is consumed per
    proposal whether or not the flip needs it, keeping the stream aligned
    across backends.
    """
    n = state.shape[0]
    h_ = [float(v) for v in h]
    ip = [int(v) for v in indptr]
    nbr = [int(v) for v in indices]
    val = [float(v) for v in data]
    st = [int(v) for v in state]
    od = [int(v) for v in order]
    u = np.asarray(uniforms, dtype=np.float64)
    pos = 0
    for t in range(len(betas)):
        beta = float(betas[t])
        for k in range(n):
            i = od[k]
            local = h_[i]
            for p in range(ip[i], ip[i + 1]):
                local += val[p] * st[nbr[p]]
            delta = -2.0 * st[i] * local
            accept_u = float(u[pos])
            pos += 1
            if delta <= 0.0 or accept_u < exp(-beta * delta):
                st[i] = -st[i]
    state[:] = np.asarray(st, dtype=np.int8)


def sqa_run(h, indptr, indices, data, bcoef, jcoef, beta_sim, order, uniforms, states) -> None:
    """One path-integral annealing read over P coupled replicas.

    ``states`` is an int8 (P, n) array updated in place. Per sweep t, each
    replica sees the problem scaled by bcoef[t] plus the replica-coupling
    field jcoef[t] * (spin above + spin below) with periodic boundary; for a
    single replica the coupling term is absent. Acceptance uses fixed
    beta_sim. Uniform consumption order: sweep, replica, spin.
    """
    num_slices, n = states.shape
    h_ = [float(v) for v in h]
    ip = [int(v) for v in indptr]
    nbr = [int(v) for v in indices]
    val = [float(v) for v in data]
    od = [int(v) for v in order]
    st = [[int(v) for v in row] for row in states]
    u = np.asarray(uniforms, dtype=np.float64)
    beta = float(beta_sim)
    pos = 0
    for t in range(len(bcoef)):
        b = float(bcoef[t])
        jc = float(jcoef[t])
        for sl in range(num_slices):
            up = sl + 1 if sl + 1 < num_slices else 0
            dn = sl - 1 if sl - 1 >= 0 else num_slices - 1
            row = st[sl]
            for k in range(n):
                i = od[k]
                local = h_[i]
                for p in range(ip[i], ip[i + 1]):
                    local += val[p] * row[nbr[p]]
                field = b * local
                if num_slices > 1:
                    field += jc * (st[up][i] + st[dn][i])
                delta = -2.0 * row[i] * field
                accept_u = float(u[pos])
                pos += 1
                if delta <= 0.0 or accept_u < exp(-beta * delta):
                    row[i] = -row[i]
    states[:, :] = np.asarray(st, dtype=np.int8)


def metropolis_chain(h, indptr, indices, data, beta, uniforms, state, thin, out_states) -> None:
    """Fixed-temperature random-site Metropolis chain.

    Runs ``thin`` sweeps (n proposals each) per recorded sample; every
    proposal consumes two uniforms, one to pick the move and one for the
    acceptance test. The move is drawn from n+1 options where the extra
    option is a no-op: single-spin flips alone make the state graph
    bipartite, so in the accept-everything limit beta -> 0 the chain would
    alternate parity classes forever; the lazy move keeps it aperiodic.
    ``state`` carries the chain across calls; ``out_states`` is an int8
    (num_samples, n) array filled in place.
    """
    n = state.shape[0]
    h_ = [float(v) for v in h]
    ip = [int(v) for v in indptr]
    nbr = [int(v) for v in indices]
    val = [float(v) for v in data]
    st = [int(v) for v in state]
    u = np.asarray(uniforms, dtype=np.float64)
    b = float(beta)
    pos = 0
    for r in range(out_states.shape[0]):
        for _ in range(thin):
            for _k in range(n):
                i = int(float(u[pos]) * (n + 1))
                pos += 1
                if i >= n:
                    pos += 1  # no-op move; skip the unused acceptance draw
                    continue
                local = h_[i]
                for p in range(ip[i], ip[i + 1]):
                    local += val[p] * st[nbr[p]]
                delta = -2.0 * st[i] * local
                accept_u = float(u[pos])
                pos += 1
                if delta <= 0.0 or accept_u < exp(-b * delta):
                    st[i] = -st[i]
        out_states[r, :] = np.asarray(st, dtype=np.int8)
    state[:] = np.asarray(st, dtype=np.int8)


def bruteforce_scan(h, indptr, indices, data, n, guard):
    """Scan all 2**n spin states; return (min_energy, candidate indices).

    The candidate list is a superset of every assignment index whose
    offset-free energy lies within ``guard`` of the minimum (the caller
    re-evaluates candidates exactly). Assignment index bit k gives x_k, with
    spin s_k = 2 x_k - 1.

    Chunked-numpy implementation; the compiled backend walks a Gray code.
    """
    h = np.asarray(h, dtype=np.float64)
    pairs_i: list[int] = []
    pairs_j: list[int] = []
    vals: list[float] = []
    for i in range(n):
        for p in range(int(indptr[i]), int(indptr[i + 1])):
            j = int(indices[p])
            if j > i:
                pairs_i.append(i)
                pairs_j.append(j)
                vals.append(float(data[p]))
    pi = np.asarray(pairs_i, dtype=np.int64)
    pj = np.asarray(pairs_j, dtype=np.int64)
    pv = np.asarray(vals, dtype=np.float64)

    total = 1 << n
    chunk = min(total, 1 << 16)
    shifts = np.arange(n, dtype=np.uint64)
    emin = np.inf
    kept: list[np.ndarray] = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        bits = ((idx[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.float64)
        spins = 2.0 * bits - 1.0
        energy = spins @ h
        if len(pv):
            energy += (spins[:, pi] * spins[:, pj]) @ pv
        emin = min(emin, float(energy.min()))
        keep = energy <= emin + guard
        if keep.any():
            kept.append(idx[keep].astype(np.int64))
    candidates = np.concatenate(kept) if kept else np.zeros(0, dtype=np.int64)
    return emin, candidates
