"""Degree reduction: lower a PUBO to a QUBO with penalty-bound ancillas.

Each substitution replaces a variable pair (i, j) inside higher-degree terms
by a fresh ancilla a, adding the product-enforcement penalty

    M * (x_i x_j - 2 a x_i - 2 a x_j + 3 a)

which is 0 iff a == x_i x_j and >= M otherwise. Pairs are chosen greedily by
co-occurrence count across the remaining degree>=3 terms (ties broken by
lowest index pair), so the ancilla count and the output are deterministic.

The default penalty weight for a substitution is
1 + sum(|c| over current terms containing the pair), which guarantees that
violating a == x_i x_j can never pay off; with that bound the minimum of the
reduced QUBO over the ancillas reproduces the original polynomial value at
every original assignment.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import InputError
from .convert import poly_to_qubo
from .models import QuboModel
from .poly import PolyObjective

__all__ = ["reduce_degree"]


def _pick_pair(terms: dict[tuple[int, ...], float]) -> tuple[int, int]:
    counts: dict[tuple[int, int], int] = {}
    for key in terms:
        if len(key) < 3:
            continue
        for pair in combinations(key, 2):
            counts[pair] = counts.get(pair, 0) + 1
    return min(counts, key=lambda p: (-counts[p], p))


def reduce_degree(
    p: PolyObjective, penalty_weight: float | None = None
) -> tuple[QuboModel, dict[int, tuple[int, int]]]:
    """Reduce a PUBO to (QuboModel, ancilla_map).

    ancilla_map maps each new variable index to the (i, j) product it stands
    for; earlier ancillas may appear inside later pairs. A quadratic input is
    cast directly with no ancillas. ``penalty_weight``, when given, is used
    for every substitution and must be positive; by default each substitution
    gets its own safe bound (see module docstring).
    """
    if penalty_weight is not None and penalty_weight <= 0:
        raise InputError("penalty_weight must be positive")
    if p.degree <= 2:
        return poly_to_qubo(p), {}

    terms = dict(p.terms)
    num_vars = p.num_vars
    ancilla_map: dict[int, tuple[int, int]] = {}

    while terms and max(len(k) for k in terms) > 2:
        i, j = _pick_pair(terms)
        ancilla = num_vars
        num_vars += 1
        ancilla_map[ancilla] = (i, j)

        if penalty_weight is None:
            weight = 1.0 + sum(
                abs(c) for key, c in terms.items() if i in key and j in key)
        else:
            weight = float(penalty_weight)

        replaced: dict[tuple[int, ...], float] = {}
        for key, coeff in terms.items():
            if len(key) >= 3 and i in key and j in key:
                new_key = tuple(sorted((set(key) - {i, j}) | {ancilla}))
            else:
                new_key = key
            replaced[new_key] = replaced.get(new_key, 0.0) + coeff

        for key, coeff in (
            ((i, j), weight),
            ((i, ancilla), -2.0 * weight),
            ((j, ancilla), -2.0 * weight),
            ((ancilla,), 3.0 * weight),
        ):
            replaced[key] = replaced.get(key, 0.0) + coeff
        terms = {k: v for k, v in replaced.items() if v != 0.0}

    return poly_to_qubo(PolyObjective(num_vars, terms)), ancilla_map
