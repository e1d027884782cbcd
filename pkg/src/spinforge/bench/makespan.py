"""Hybrid makespan minimization: binary search over the horizon.

The time-indexed encoding fixes the number of slots T, so makespan
minimization runs the solver inside a classical binary search over T. A
horizon counts as feasible when any returned read decodes to a schedule the
independent validator accepts. Because the solver is stochastic it may miss
feasible states, so the result is a heuristic upper bound on the true
minimal makespan, never an under-estimate of a horizon observed feasible.
"""

from __future__ import annotations

import dataclasses

from ..core.convert import qubo_to_ising, spins_to_bits
from ..errors import InputError, SolverError
from ..mappers import SchedulingInstance, is_feasible_schedule, map_scheduling
from ..rng import derive_seed
from .engines import EngineSpec

__all__ = ["makespan_binary_search"]


def _with_horizon(inst: SchedulingInstance, num_slots: int) -> SchedulingInstance:
    priority = tuple((k, v) for k, v in inst.priority if k[1] < num_slots)
    return dataclasses.replace(inst, num_slots=num_slots, priority=priority)


def horizon_is_feasible(inst: SchedulingInstance, num_slots: int, engine: EngineSpec,
                        seed: int) -> bool:
    probe = _with_horizon(inst, num_slots)
    qubo, layout = map_scheduling(probe)
    samples = engine.run(qubo_to_ising(qubo), seed=seed)
    for row in samples.aggregate().assignments:
        schedule = layout.decode(spins_to_bits(row))
        if is_feasible_schedule(probe, schedule):
            return True
    return False


def makespan_binary_search(inst: SchedulingInstance, engine: EngineSpec, t_max: int,
                           seed: int = 0) -> int:
    """Smallest horizon the solver can certify feasible, by binary search.

    ``inst.num_slots`` is ignored; each probe re-maps the instance at the
    candidate horizon. Fails explicitly if even ``t_max`` is not certified.
    """
    if t_max < 1:
        raise InputError("t_max must be >= 1")
    if not horizon_is_feasible(inst, t_max, engine, derive_seed(seed, "makespan", t_max)):
        raise SolverError(f"no feasible schedule certified at the horizon cap {t_max}")
    lo, hi = 1, t_max
    while lo < hi:
        mid = (lo + hi) // 2
        if horizon_is_feasible(inst, mid, engine, derive_seed(seed, "makespan", mid)):
            hi = mid
        else:
            lo = mid + 1
    return lo
