"""Front-ends compiling domain problems into binary objectives."""

from .coloring import ColoringInstance, ColoringLayout, is_proper_coloring, map_coloring
from .faults import (
    EpsLayout,
    EpsNetwork,
    diagnosis_consistent,
    map_fault_diagnosis,
    predicted_readouts,
)
from .planning import (
    NO_OP,
    Action,
    PlanningLayout,
    PlanningProblem,
    PlanningWeights,
    map_planning,
    simulate_plan,
)
from .scheduling import (
    ScheduleWeights,
    SchedulingInstance,
    SchedulingLayout,
    is_feasible_schedule,
    map_scheduling,
    priority_cost,
)

__all__ = [
    "ColoringInstance",
    "ColoringLayout",
    "map_coloring",
    "is_proper_coloring",
    "Action",
    "PlanningProblem",
    "PlanningWeights",
    "PlanningLayout",
    "map_planning",
    "simulate_plan",
    "NO_OP",
    "SchedulingInstance",
    "ScheduleWeights",
    "SchedulingLayout",
    "map_scheduling",
    "is_feasible_schedule",
    "priority_cost",
    "EpsNetwork",
    "EpsLayout",
    "map_fault_diagnosis",
    "predicted_readouts",
    "diagnosis_consistent",
]
