"""Sample sets: solver output with energies, counts, and provenance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..errors import InputError

__all__ = ["SampleSet"]

_DOMAINS = {"binary": (0, 1), "spin": (-1, 1)}


@dataclass(frozen=True)
class SampleSet:
    """Multiset of assignments with energies and read counts.

    Records are kept in a deterministic order (engines emit them in read
    order; :meth:`aggregate` sorts by energy, then assignment). ``origins``
    optionally tags each record with (gauge_id, read_index) so every read in a
    pipeline report stays traceable.
    """

    domain: str
    assignments: np.ndarray          # (records, num_vars) int8
    energies: np.ndarray             # (records,) float64
    counts: np.ndarray               # (records,) int64
    provenance: dict[str, Any] = field(default_factory=dict)
    origins: np.ndarray | None = None  # (records, 2) int64: (gauge_id, read_index)

    def __post_init__(self):
        if self.domain not in _DOMAINS:
            raise InputError(f"unknown sample domain {self.domain!r}")
        assignments = np.asarray(self.assignments, dtype=np.int8)
        if assignments.ndim != 2:
            raise InputError("assignments must be a 2-D array")
        lo, hi = _DOMAINS[self.domain]
        if assignments.size and not np.isin(assignments, (lo, hi)).all():
            raise InputError(f"assignments must take values in {{{lo},{hi}}}")
        energies = np.asarray(self.energies, dtype=np.float64)
        counts = np.asarray(self.counts, dtype=np.int64)
        if not (len(assignments) == len(energies) == len(counts)):
            raise InputError("assignments, energies, counts must have equal length")
        if counts.size and counts.min() < 1:
            raise InputError("occurrence counts must be positive")
        origins = self.origins
        if origins is not None:
            origins = np.asarray(origins, dtype=np.int64)
            if origins.shape != (len(assignments), 2):
                raise InputError("origins must be (records, 2)")
        object.__setattr__(self, "assignments", assignments)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "origins", origins)

    def __len__(self) -> int:
        return len(self.energies)

    @property
    def num_vars(self) -> int:
        return self.assignments.shape[1]

    @property
    def total_reads(self) -> int:
        return int(self.counts.sum())

    def best_index(self) -> int:
        if not len(self):
            raise InputError("empty sample set")
        return int(np.argmin(self.energies))

    def best(self) -> tuple[np.ndarray, float]:
        idx = self.best_index()
        return self.assignments[idx], float(self.energies[idx])

    def min_energy(self) -> float:
        return float(self.energies.min())

    def success_fraction(self, target_energy: float, tol: float = 1e-9) -> float:
        """Fraction of reads whose energy is within tol of target_energy."""
        if not len(self):
            return 0.0
        hits = self.counts[self.energies <= target_energy + tol].sum()
        return float(hits) / float(self.total_reads)

    def aggregate(self) -> "SampleSet":
        """Merge identical assignments; sort by (energy, assignment). Drops origins."""
        groups: dict[bytes, int] = {}
        order: list[bytes] = []
        merged_counts: dict[bytes, int] = {}
        energies: dict[bytes, float] = {}
        for idx in range(len(self)):
            key = self.assignments[idx].tobytes()
            if key not in groups:
                groups[key] = idx
                order.append(key)
                merged_counts[key] = 0
                energies[key] = float(self.energies[idx])
            merged_counts[key] += int(self.counts[idx])
        order.sort(key=lambda k: (energies[k], k))
        assignments = np.array([self.assignments[groups[k]] for k in order], dtype=np.int8)
        if not order:
            assignments = assignments.reshape(0, self.num_vars)
        return SampleSet(
            domain=self.domain,
            assignments=assignments,
            energies=np.array([energies[k] for k in order]),
            counts=np.array([merged_counts[k] for k in order], dtype=np.int64),
            provenance=dict(self.provenance),
        )

    def validate_energies(self, model, tol: float = 1e-9) -> None:
        """Check stored energies against re-evaluation under model."""
        if not len(self):
            return
        recomputed = model.evaluate_batch(self.assignments)
        worst = float(np.max(np.abs(recomputed - self.energies)))
        if worst > tol:
            raise InputError(f"stored energies deviate from re-evaluation by {worst:g}")

    def to_dict(self) -> dict:
        records = []
        for idx in range(len(self)):
            rec = {
                "assignment": [int(v) for v in self.assignments[idx]],
                "energy": float(self.energies[idx]),
                "count": int(self.counts[idx]),
            }
            if self.origins is not None:
                rec["origin"] = [int(self.origins[idx, 0]), int(self.origins[idx, 1])]
            records.append(rec)
        return {
            "domain": self.domain,
            "num_vars": self.num_vars,
            "records": records,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SampleSet":
        records = data["records"]
        n = data["num_vars"]
        assignments = np.array([r["assignment"] for r in records], dtype=np.int8)
        if not records:
            assignments = assignments.reshape(0, n)
        origins = None
        if records and "origin" in records[0]:
            origins = np.array([r["origin"] for r in records], dtype=np.int64)
        return cls(
            domain=data["domain"],
            assignments=assignments,
            energies=np.array([r["energy"] for r in records], dtype=np.float64),
            counts=np.array([r["count"] for r in records], dtype=np.int64),
            provenance=data.get("provenance", {}),
            origins=origins,
        )
