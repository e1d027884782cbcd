"""Conversions between the binary and spin quadratic forms.

The change of variables is s = 2x - 1 (equivalently x = (s + 1) / 2). Both
directions are exact linear maps on the coefficients, so a round trip
reproduces the inputs up to floating-point rounding.
"""

from __future__ import annotations

import numpy as np

from ..errors import InputError
from .models import IsingModel, QuboModel
from .poly import PolyObjective

__all__ = ["qubo_to_ising", "ising_to_qubo", "poly_to_qubo", "spins_to_bits", "bits_to_spins"]


def qubo_to_ising(q: QuboModel) -> IsingModel:
    """Substitute x_i = (s_i + 1)/2 into a QUBO.

    a_i x_i          -> a_i/2 s_i + a_i/2
    b_ij x_i x_j     -> b_ij/4 (s_i s_j + s_i + s_j + 1)
    """
    h = q.linear / 2.0
    offset = q.offset + float(np.sum(q.linear)) / 2.0
    J: dict[tuple[int, int], float] = {}
    h = h.copy()
    for (i, j), b in q.quadratic.items():
        J[(i, j)] = b / 4.0
        h[i] += b / 4.0
        h[j] += b / 4.0
        offset += b / 4.0
    return IsingModel(h, J, offset)


def ising_to_qubo(m: IsingModel) -> QuboModel:
    """Substitute s_j = 2 x_j - 1 into an Ising model.

    h_j s_j          -> 2 h_j x_j - h_j
    J_ij s_i s_j     -> 4 J_ij x_i x_j - 2 J_ij x_i - 2 J_ij x_j + J_ij
    """
    linear = 2.0 * m.linear
    offset = m.offset - float(np.sum(m.linear))
    quadratic: dict[tuple[int, int], float] = {}
    linear = linear.copy()
    for (i, j), coupling in m.quadratic.items():
        quadratic[(i, j)] = 4.0 * coupling
        linear[i] -= 2.0 * coupling
        linear[j] -= 2.0 * coupling
        offset += coupling
    return QuboModel(linear, quadratic, offset)


def poly_to_qubo(p: PolyObjective) -> QuboModel:
    """Exact cast of a degree<=2 polynomial; higher degrees need reduce_degree."""
    if p.degree > 2:
        raise InputError(f"polynomial has degree {p.degree}; apply reduce_degree first")
    linear = np.zeros(p.num_vars)
    quadratic: dict[tuple[int, int], float] = {}
    offset = 0.0
    for key, coeff in p.terms.items():
        if len(key) == 0:
            offset += coeff
        elif len(key) == 1:
            linear[key[0]] += coeff
        else:
            quadratic[key] = quadratic.get(key, 0.0) + coeff
    return QuboModel(linear, quadratic, offset)


def spins_to_bits(spins: np.ndarray) -> np.ndarray:
    return ((np.asarray(spins) + 1) // 2).astype(np.int8)


def bits_to_spins(bits: np.ndarray) -> np.ndarray:
    return (np.asarray(bits) * 2 - 1).astype(np.int8)
