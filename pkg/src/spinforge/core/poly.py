"""Pseudo-Boolean polynomial objectives (PUBO).

A :class:`PolyObjective` is the universal front-end output: a sparse
polynomial over binary variables, stored as a map from sorted index tuples to
real coefficients. The empty tuple holds the constant offset. Binary
idempotence (x**2 == x) is applied at construction, so every key is strictly
increasing and duplicate-free.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

import numpy as np

from ..errors import InputError

__all__ = ["PolyObjective", "PolyBuilder"]


class PolyObjective:
    """Immutable sparse polynomial over {0,1} variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], float]):
        if num_vars < 0:
            raise InputError("num_vars must be non-negative")
        clean: dict[tuple[int, ...], float] = {}
        for key, coeff in terms.items():
            key = tuple(sorted(set(int(i) for i in key)))
            if key and (key[0] < 0 or key[-1] >= num_vars):
                raise InputError(f"term {key} references a variable outside [0, {num_vars})")
            coeff = float(coeff)
            if not math.isfinite(coeff):
                raise InputError(f"non-finite coefficient for term {key}")
            if coeff != 0.0:
                clean[key] = clean.get(key, 0.0) + coeff
                if clean[key] == 0.0:
                    del clean[key]
        object.__setattr__(self, "num_vars", int(num_vars))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyObjective is immutable")

    @property
    def offset(self) -> float:
        return self.terms.get((), 0.0)

    @property
    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    def evaluate(self, x: Iterable[int]) -> float:
        """Polynomial value at a 0/1 assignment."""
        bits = np.asarray(x)
        if bits.shape != (self.num_vars,):
            raise InputError(f"assignment length {bits.shape} != num_vars {self.num_vars}")
        if not np.isin(bits, (0, 1)).all():
            raise InputError("assignment values must be 0 or 1")
        total = 0.0
        for key, coeff in self.terms.items():
            prod = coeff
            for i in key:
                if bits[i] == 0:
                    prod = 0.0
                    break
            total += prod
        return total

    def evaluate_batch(self, bits: np.ndarray) -> np.ndarray:
        """Polynomial values for a (num_samples, num_vars) 0/1 matrix."""
        bits = np.asarray(bits)
        out = np.zeros(bits.shape[0])
        for key, coeff in self.terms.items():
            if not key:
                out += coeff
                continue
            mask = bits[:, key[0]].astype(np.float64)
            for i in key[1:]:
                mask = mask * bits[:, i]
            out += coeff * mask
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyObjective)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"PolyObjective(num_vars={self.num_vars}, terms={len(self.terms)}, degree={self.degree})"

    def to_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [[list(k), v] for k, v in sorted(self.terms.items())],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PolyObjective":
        return cls(data["num_vars"], {tuple(k): v for k, v in data["terms"]})


class PolyBuilder:
    """Mutable accumulator used by the problem mappers.

    ``add(indices, coeff)`` merges like terms and applies idempotence;
    ``build`` freezes the result (dropping exact zeros).
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self._terms: dict[tuple[int, ...], float] = {}

    def add(self, indices: Iterable[int], coeff: float) -> None:
        if coeff == 0.0:
            return
        key = tuple(sorted(set(indices)))
        self._terms[key] = self._terms.get(key, 0.0) + coeff

    def add_constant(self, value: float) -> None:
        self.add((), value)

    def build(self) -> PolyObjective:
        return PolyObjective(self.num_vars, self._terms)
