"""Engine selection by name, with JSON-friendly parameter blobs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..core.models import IsingModel
from ..core.samples import SampleSet
from ..engines import (
    AnnealSchedule,
    SaParams,
    SqaParams,
    boltzmann_sample,
    simulated_annealing,
    simulated_quantum_annealing,
)
from ..errors import InputError

__all__ = ["EngineSpec"]


@dataclass(frozen=True)
class EngineSpec:
    """A named engine plus parameter overrides, as configured in run files."""

    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("sa", "sqa", "boltzmann"):
            raise InputError(f"unknown engine {self.kind!r}")

    def run(self, model: IsingModel, seed: int | None = None,
            workers: int | None = None) -> SampleSet:
        """Run on an Ising model; ``seed`` overrides the configured one."""
        params = dict(self.params)
        if seed is not None:
            params["seed"] = int(seed)
        if self.kind == "sa":
            return simulated_annealing(model, SaParams(**params), workers=workers)
        if self.kind == "sqa":
            schedule = params.pop("schedule", None)
            if isinstance(schedule, str):
                params["schedule"] = AnnealSchedule.from_csv_path(schedule)
            elif schedule is not None:
                params["schedule"] = AnnealSchedule(tuple(tuple(p) for p in schedule))
            return simulated_quantum_annealing(model, SqaParams(**params), workers=workers)
        params.setdefault("beta", 1.0)
        params.setdefault("reads", 100)
        params.setdefault("sweeps", 100)
        return boltzmann_sample(model, **params)

    def reads_per_run(self) -> int:
        if self.kind == "boltzmann":
            return int(self.params.get("reads", 100))
        return int(self.params.get("num_reads", 100))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict) -> "EngineSpec":
        return cls(kind=data["kind"], params=dict(data.get("params", {})))
