# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled hot-loop kernels.

Mirror of ``_kernels_py``: identical arithmetic order, libm calls, and
uniform-consumption discipline, so compiled and pure backends emit
bit-identical samples. See that module for the behavioural contracts.
"""

from libc.math cimport exp
from libc.stdint cimport int64_t, uint64_t

import numpy as np

ctypedef signed char spin_t


def sa_run(const double[::1] h, const int64_t[::1] indptr, const int64_t[::1] indices,
           const double[::1] data, const double[::1] betas, const int64_t[::1] order,
           const double[::1] uniforms, spin_t[::1] state):
    cdef Py_ssize_t n = state.shape[0]
    cdef Py_ssize_t sweeps = betas.shape[0]
    cdef Py_ssize_t t, k, p
    cdef int64_t i
    cdef double beta, local, delta
    cdef Py_ssize_t pos = 0
    with nogil:
        for t in range(sweeps):
            beta = betas[t]
            for k in range(n):
                i = order[k]
                local = h[i]
                for p in range(indptr[i], indptr[i + 1]):
                    local += data[p] * state[indices[p]]
                delta = -2.0 * state[i] * local
                if delta <= 0.0 or uniforms[pos] < exp(-beta * delta):
                    state[i] = -state[i]
                pos += 1


def sqa_run(const double[::1] h, const int64_t[::1] indptr, const int64_t[::1] indices,
            const double[::1] data, const double[::1] bcoef, const double[::1] jcoef,
            double beta_sim, const int64_t[::1] order, const double[::1] uniforms,
            spin_t[:, ::1] states):
    cdef Py_ssize_t num_slices = states.shape[0]
    cdef Py_ssize_t n = states.shape[1]
    cdef Py_ssize_t sweeps = bcoef.shape[0]
    cdef Py_ssize_t t, sl, k, p, up, dn
    cdef int64_t i
    cdef double b, jc, local, field, delta
    cdef Py_ssize_t pos = 0
    with nogil:
        for t in range(sweeps):
            b = bcoef[t]
            jc = jcoef[t]
            for sl in range(num_slices):
                up = sl + 1 if sl + 1 < num_slices else 0
                dn = sl - 1 if sl - 1 >= 0 else num_slices - 1
                for k in range(n):
                    i = order[k]
                    local = h[i]
                    for p in range(indptr[i], indptr[i + 1]):
                        local += data[p] * states[sl, indices[p]]
                    field = b * local
                    if num_slices > 1:
                        field += jc * (states[up, i] + states[dn, i])
                    delta = -2.0 * states[sl, i] * field
                    if delta <= 0.0 or uniforms[pos] < exp(-beta_sim * delta):
                        states[sl, i] = -states[sl, i]
                    pos += 1


def metropolis_chain(const double[::1] h, const int64_t[::1] indptr, const int64_t[::1] indices,
                     const double[::1] data, double beta,
                     const double[::1] uniforms, spin_t[::1] state, int thin,
                     spin_t[:, ::1] out_states):
    # random-move proposals over n+1 options (the extra one a no-op), two
    # uniforms per proposal; see the pure mirror for the aperiodicity
    # rationale
    cdef Py_ssize_t n = state.shape[0]
    cdef Py_ssize_t num_samples = out_states.shape[0]
    cdef Py_ssize_t r, t, k, p, c, i
    cdef double local, delta
    cdef Py_ssize_t pos = 0
    with nogil:
        for r in range(num_samples):
            for t in range(thin):
                for k in range(n):
                    i = <Py_ssize_t>(uniforms[pos] * (n + 1))
                    pos += 1
                    if i >= n:
                        pos += 1  # no-op move; skip the unused acceptance draw
                        continue
                    local = h[i]
                    for p in range(indptr[i], indptr[i + 1]):
                        local += data[p] * state[indices[p]]
                    delta = -2.0 * state[i] * local
                    if delta <= 0.0 or uniforms[pos] < exp(-beta * delta):
                        state[i] = -state[i]
                    pos += 1
            for c in range(n):
                out_states[r, c] = state[c]


def bruteforce_scan(const double[::1] h, const int64_t[::1] indptr, const int64_t[::1] indices,
                    const double[::1] data, int n, double guard):
    """Gray-code walk over all 2**n spin states.

    Returns (min_energy, candidate indices): candidates are a superset of all
    assignment indices within ``guard`` of the running minimum (offset-free
    energies; bit k of an index gives x_k, spin s_k = 2 x_k - 1).
    """
    cdef spin_t[::1] state = np.full(n, -1, dtype=np.int8)
    cdef uint64_t total = (<uint64_t>1) << n
    cdef uint64_t step, value, gray
    cdef Py_ssize_t i, p, b
    cdef double e = 0.0
    cdef double local, emin

    for i in range(n):
        e += h[i] * state[i]
        for p in range(indptr[i], indptr[i + 1]):
            if indices[p] > i:
                e += data[p] * state[i] * state[indices[p]]
    emin = e

    out = np.empty(4096, dtype=np.int64)
    cdef int64_t[::1] buf = out
    cdef Py_ssize_t count = 0
    buf[0] = 0
    count = 1

    for step in range(1, total):
        value = step
        b = 0
        while not (value & 1):
            value >>= 1
            b += 1
        local = h[b]
        for p in range(indptr[b], indptr[b + 1]):
            local += data[p] * state[indices[p]]
        e += -2.0 * state[b] * local
        state[b] = -state[b]
        if e < emin:
            emin = e
        if e <= emin + guard:
            if count == buf.shape[0]:
                grown = np.empty(buf.shape[0] * 2, dtype=np.int64)
                grown[:count] = out[:count]
                out = grown
                buf = out
            gray = step ^ (step >> 1)
            buf[count] = <int64_t>gray
            count += 1

    return emin, out[:count].copy()
