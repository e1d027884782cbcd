"""Quadratic problem representations.

Two interchangeable forms:

* :class:`QuboModel` — energy(x) = offset + sum_i a_i x_i
  + sum_{i<j} b_ij x_i x_j over x in {0,1}^n.
* :class:`IsingModel` — energy(s) = offset + sum_j h_j s_j
  + sum_{i<j} J_ij s_i s_j over s in {-1,+1}^n.

Both are immutable after construction and safe to share across workers.
Quadratic terms are sparse dicts keyed by (i, j) with i < j; linear terms are
dense float arrays. Exact zeros produced by arithmetic are pruned (threshold
0, no epsilon) so that serialized models are reproducible.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

from ..errors import InputError

__all__ = ["QuboModel", "IsingModel", "adjacency_csr"]


def _clean_quadratic(num_vars: int, quadratic: Mapping[tuple[int, int], float]) -> dict:
    clean: dict[tuple[int, int], float] = {}
    for (i, j), value in quadratic.items():
        i, j = int(i), int(j)
        if i == j:
            raise InputError(f"self-coupling ({i},{j}) is not allowed")
        if i > j:
            i, j = j, i
        if i < 0 or j >= num_vars:
            raise InputError(f"coupling ({i},{j}) outside [0, {num_vars})")
        value = float(value)
        if not math.isfinite(value):
            raise InputError(f"non-finite coupling at ({i},{j})")
        if value != 0.0:
            clean[(i, j)] = clean.get((i, j), 0.0) + value
            if clean[(i, j)] == 0.0:
                del clean[(i, j)]
    return clean


def _clean_linear(linear, num_vars: int | None) -> np.ndarray:
    arr = np.asarray(linear, dtype=np.float64).copy()
    if arr.ndim != 1:
        raise InputError("linear coefficients must be one-dimensional")
    if num_vars is not None and arr.shape[0] != num_vars:
        raise InputError(f"linear length {arr.shape[0]} != num_vars {num_vars}")
    if not np.isfinite(arr).all():
        raise InputError("non-finite linear coefficient")
    arr.flags.writeable = False
    return arr


class _QuadraticModel:
    """Shared storage/evaluation for the two quadratic forms."""

    __slots__ = ("num_vars", "linear", "quadratic", "offset")

    #: values an assignment may take; subclasses override
    _domain: tuple[int, int] = (0, 1)

    def __init__(self, linear, quadratic: Mapping[tuple[int, int], float] | None = None,
                 offset: float = 0.0, num_vars: int | None = None):
        lin = _clean_linear(linear, num_vars)
        n = lin.shape[0]
        quad = _clean_quadratic(n, quadratic or {})
        if not math.isfinite(float(offset)):
            raise InputError("non-finite offset")
        object.__setattr__(self, "num_vars", n)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "quadratic", quad)
        object.__setattr__(self, "offset", float(offset))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _check_assignment(self, values: np.ndarray) -> None:
        if values.shape[-1] != self.num_vars:
            raise InputError(
                f"assignment length {values.shape[-1]} != num_vars {self.num_vars}")
        lo, hi = self._domain
        if not np.isin(values, (lo, hi)).all():
            raise InputError(f"assignment values must be in {{{lo},{hi}}}")

    def evaluate(self, assignment: Iterable[int]) -> float:
        """Exact polynomial value, offset included."""
        values = np.asarray(assignment)
        self._check_assignment(values)
        total = self.offset
        for i in range(self.num_vars):
            total += self.linear[i] * values[i]
        for (i, j), coupling in self.quadratic.items():
            total += coupling * values[i] * values[j]
        return float(total)

    def evaluate_batch(self, assignments: np.ndarray) -> np.ndarray:
        """Energies for a (num_samples, num_vars) matrix of assignments.

        Accumulates in the same order as :meth:`evaluate` (offset, linear by
        index, quadratic by insertion), so a row's energy is bit-identical to
        its single evaluation and independent of the batch it sits in.
        """
        values = np.asarray(assignments, dtype=np.float64)
        if values.ndim != 2:
            raise InputError("expected a 2-D assignment batch")
        self._check_assignment(values)
        out = np.full(values.shape[0], self.offset)
        for i in range(self.num_vars):
            out += self.linear[i] * values[:, i]
        for (i, j), coupling in self.quadratic.items():
            out += coupling * values[:, i] * values[:, j]
        return out

    def max_coefficient(self) -> float:
        """Largest |linear| or |quadratic| coefficient (0 for an empty model)."""
        best = float(np.max(np.abs(self.linear))) if self.num_vars else 0.0
        for value in self.quadratic.values():
            best = max(best, abs(value))
        return best

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.num_vars == other.num_vars
            and np.array_equal(self.linear, other.linear)
            and self.quadratic == other.quadratic
            and self.offset == other.offset
        )

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(num_vars={self.num_vars}, "
                f"quadratic_terms={len(self.quadratic)}, offset={self.offset})")

    # JSON schema: {"num_vars": n, "linear": [...], "quadratic": [[i,j,v],...],
    # "offset": v}; floats round-trip exactly through repr.
    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "linear": [float(v) for v in self.linear],
            "quadratic": [[i, j, v] for (i, j), v in sorted(self.quadratic.items())],
            "offset": self.offset,
        }

    @classmethod
    def from_dict(cls, data: dict):
        quadratic = {(int(i), int(j)): float(v) for i, j, v in data.get("quadratic", [])}
        return cls(
            linear=data["linear"],
            quadratic=quadratic,
            offset=data.get("offset", 0.0),
            num_vars=data["num_vars"],
        )


class QuboModel(_QuadraticModel):
    """Quadratic objective over binary variables."""

    _domain = (0, 1)


class IsingModel(_QuadraticModel):
    """Quadratic objective over ±1 spins."""

    _domain = (-1, 1)

    @property
    def h(self) -> np.ndarray:
        return self.linear

    @property
    def J(self) -> dict[tuple[int, int], float]:
        return self.quadratic

    @property
    def num_spins(self) -> int:
        return self.num_vars


def adjacency_csr(model: _QuadraticModel):
    """Symmetric CSR view (indptr, indices, data) of the quadratic terms.

    Each coupling (i, j) appears in both row i and row j; rows list neighbors
    in ascending index order so kernel arithmetic is order-deterministic.
    """
    n = model.num_vars
    neighbors: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for (i, j), value in model.quadratic.items():
        neighbors[i].append((j, value))
        neighbors[j].append((i, value))
    indptr = np.zeros(n + 1, dtype=np.int64)
    total = sum(len(row) for row in neighbors)
    indices = np.zeros(total, dtype=np.int64)
    data = np.zeros(total, dtype=np.float64)
    pos = 0
    for i, row in enumerate(neighbors):
        row.sort()
        for j, value in row:
            indices[pos] = j
            data[pos] = value
            pos += 1
        indptr[i + 1] = pos
    return indptr, indices, data
