"""Time-indexed scheduling -> QUBO.

One bit x_{j,m,t} per (job, machine, slot): N*M*T variables total, eligibility
and all hard constraints expressed as penalties so the count formula stays
exact. Feasible schedules sit at an energy equal to their priority cost alone
(priority weights are per-(job, slot) linear costs; lower is better).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ..core.models import QuboModel
from ..errors import InputError

__all__ = ["ScheduleWeights", "SchedulingInstance", "SchedulingLayout",
           "map_scheduling", "is_feasible_schedule", "priority_cost"]


@dataclass(frozen=True)
class ScheduleWeights:
    assignment: float = 1.0
    capacity: float = 1.0
    precedence: float = 1.0
    ineligible: float = 1.0


@dataclass(frozen=True)
class SchedulingInstance:
    num_jobs: int
    num_machines: int
    num_slots: int
    eligible: tuple[tuple[int, ...], ...] = ()        # per job; empty = all machines
    priority: tuple[tuple[int, float], ...] | Mapping = ()  # (job, slot) -> cost
    precedences: tuple[tuple[int, int], ...] = ()     # (a, b): a strictly before b
    weights: ScheduleWeights = field(default_factory=ScheduleWeights)

    def __post_init__(self):
        if min(self.num_jobs, self.num_machines, self.num_slots) < 1:
            raise InputError("jobs, machines, and slots must all be >= 1")
        if self.eligible:
            if len(self.eligible) != self.num_jobs:
                raise InputError("eligibility list must cover every job")
            clean = []
            for j, machines in enumerate(self.eligible):
                ms = tuple(sorted(set(int(m) for m in machines)))
                if not ms:
                    raise InputError(f"job {j} has no eligible machine")
                if ms[0] < 0 or ms[-1] >= self.num_machines:
                    raise InputError(f"job {j} eligibility references an unknown machine")
                clean.append(ms)
            object.__setattr__(self, "eligible", tuple(clean))
        prio: dict[tuple[int, int], float] = {}
        items = self.priority.items() if isinstance(self.priority, Mapping) else self.priority
        for key, value in items:
            j, t = (int(key[0]), int(key[1]))
            if not (0 <= j < self.num_jobs and 0 <= t < self.num_slots):
                raise InputError(f"priority entry ({j},{t}) out of range")
            prio[(j, t)] = float(value)
        object.__setattr__(self, "priority", tuple(sorted(prio.items())))
        for a, b in self.precedences:
            if not (0 <= a < self.num_jobs and 0 <= b < self.num_jobs) or a == b:
                raise InputError(f"bad precedence ({a},{b})")
        object.__setattr__(self, "precedences",
                           tuple(sorted(set((int(a), int(b)) for a, b in self.precedences))))
        self._check_acyclic()

    def _check_acyclic(self):
        succ: dict[int, list[int]] = {}
        indeg = {j: 0 for j in range(self.num_jobs)}
        for a, b in self.precedences:
            succ.setdefault(a, []).append(b)
            indeg[b] += 1
        queue = [j for j in range(self.num_jobs) if indeg[j] == 0]
        seen = 0
        while queue:
            j = queue.pop()
            seen += 1
            for k in succ.get(j, ()):
                indeg[k] -= 1
                if indeg[k] == 0:
                    queue.append(k)
        if seen != self.num_jobs:
            raise InputError("precedence graph has a cycle")

    def machines_for(self, job: int) -> tuple[int, ...]:
        if self.eligible:
            return self.eligible[job]
        return tuple(range(self.num_machines))

    def priority_map(self) -> dict[tuple[int, int], float]:
        return dict(self.priority)

    def to_dict(self) -> dict:
        return {
            "kind": "scheduling",
            "num_jobs": self.num_jobs,
            "num_machines": self.num_machines,
            "num_slots": self.num_slots,
            "eligible": [list(e) for e in self.eligible],
            "priority": [[list(k), v] for k, v in self.priority],
            "precedences": [list(p) for p in self.precedences],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SchedulingInstance":
        return cls(
            num_jobs=data["num_jobs"],
            num_machines=data["num_machines"],
            num_slots=data["num_slots"],
            eligible=tuple(tuple(e) for e in data.get("eligible", ())),
            priority=tuple((tuple(k), v) for k, v in data.get("priority", ())),
            precedences=tuple(tuple(p) for p in data.get("precedences", ())),
        )


@dataclass(frozen=True)
class SchedulingLayout:
    """Bit layout: x_{j,m,t} at index j*M*T + m*T + t."""

    num_jobs: int
    num_machines: int
    num_slots: int

    @property
    def num_bits(self) -> int:
        return self.num_jobs * self.num_machines * self.num_slots

    def index(self, job: int, machine: int, slot: int) -> int:
        return (job * self.num_machines + machine) * self.num_slots + slot

    def decode(self, bits: Sequence[int]) -> list[tuple[int, int] | None]:
        """Per job, the (machine, slot) chosen, or None if not exactly one bit."""
        out: list[tuple[int, int] | None] = []
        for j in range(self.num_jobs):
            hits = [
                (m, t)
                for m in range(self.num_machines)
                for t in range(self.num_slots)
                if bits[self.index(j, m, t)]
            ]
            out.append(hits[0] if len(hits) == 1 else None)
        return out

    def to_dict(self) -> dict:
        return {"kind": "scheduling", "num_jobs": self.num_jobs,
                "num_machines": self.num_machines, "num_slots": self.num_slots}

    @classmethod
    def from_dict(cls, data: dict) -> "SchedulingLayout":
        return cls(data["num_jobs"], data["num_machines"], data["num_slots"])


def map_scheduling(inst: SchedulingInstance) -> tuple[QuboModel, SchedulingLayout]:
    layout = SchedulingLayout(inst.num_jobs, inst.num_machines, inst.num_slots)
    w = inst.weights
    linear = np.zeros(layout.num_bits)
    quadratic: dict[tuple[int, int], float] = {}
    offset = 0.0

    def add_quad(a: int, b: int, value: float) -> None:
        key = (min(a, b), max(a, b))
        quadratic[key] = quadratic.get(key, 0.0) + value

    # each job runs exactly once: (sum_{m,t} x - 1)^2
    for j in range(inst.num_jobs):
        slots = [layout.index(j, m, t)
                 for m in range(inst.num_machines) for t in range(inst.num_slots)]
        offset += w.assignment
        for a_i, a in enumerate(slots):
            linear[a] -= w.assignment
            for b in slots[a_i + 1:]:
                add_quad(a, b, 2.0 * w.assignment)

    # machine capacity: one job per (machine, slot)
    for m in range(inst.num_machines):
        for t in range(inst.num_slots):
            for j1 in range(inst.num_jobs):
                for j2 in range(j1 + 1, inst.num_jobs):
                    add_quad(layout.index(j1, m, t), layout.index(j2, m, t), w.capacity)

    # precedence a -> b: penalize any placement with t_b <= t_a
    for a, b in inst.precedences:
        for ta in range(inst.num_slots):
            for tb in range(ta + 1):
                for ma in range(inst.num_machines):
                    for mb in range(inst.num_machines):
                        add_quad(layout.index(a, ma, ta), layout.index(b, mb, tb),
                                 w.precedence)

    # eligibility: linear penalty on forbidden machines
    if inst.eligible:
        for j in range(inst.num_jobs):
            allowed = set(inst.eligible[j])
            for m in range(inst.num_machines):
                if m in allowed:
                    continue
                for t in range(inst.num_slots):
                    linear[layout.index(j, m, t)] += w.ineligible

    # priority objective: per-(job, slot) linear cost
    for (j, t), cost in inst.priority:
        for m in range(inst.num_machines):
            linear[layout.index(j, m, t)] += cost

    return QuboModel(linear, quadratic, offset), layout


def is_feasible_schedule(inst: SchedulingInstance,
                         schedule: Sequence[tuple[int, int] | None]) -> bool:
    """Independent validator: assignment, eligibility, capacity, precedence."""
    if len(schedule) != inst.num_jobs:
        return False
    if any(s is None for s in schedule):
        return False
    occupied: set[tuple[int, int]] = set()
    for j, (m, t) in enumerate(schedule):
        if not (0 <= m < inst.num_machines and 0 <= t < inst.num_slots):
            return False
        if m not in inst.machines_for(j):
            return False
        if (m, t) in occupied:
            return False
        occupied.add((m, t))
    return all(schedule[a][1] < schedule[b][1] for a, b in inst.precedences)


def priority_cost(inst: SchedulingInstance,
                  schedule: Sequence[tuple[int, int] | None]) -> float:
    prio = inst.priority_map()
    total = 0.0
    for j, placed in enumerate(schedule):
        if placed is not None:
            total += prio.get((j, placed[1]), 0.0)
    return total
