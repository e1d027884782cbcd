"""Time-indexed planning -> pseudo-Boolean objective.

State bits x_i^(t) for t = 0..L track the N state variables over the horizon;
action bits y_j^(t) for t = 1..L say which action fires at step t. The mapper
always appends an explicit no-op action so the one-action-per-step constraint
stays satisfiable. Initial-state bits (t = 0) are substituted as constants,
so the polynomial ranges over N*L + L*M free bits while the declared encoding
size remains N*(L+1) + L*M.

Energy terms (all weights configurable, default 1):

  goal:           sum_{i in goal} (1 - x_i^(L))
  single action:  per step, (sum_j y_j^(t) - 1)^2
  preconditions:  y_j^(t) * (1 - x_i^(t-1)) per required variable
  effects:        y_j^(t) * [x_i^(t) != v] per effect (i, v)
  frame (no-op):  y_j^(t) * xor(x_i^(t-1), x_i^(t)) per variable j leaves
                  untouched — the only cubic family; lower it with
                  reduce_degree before solving.

Zero energy is achieved exactly by encodings of valid plans: one action per
step whose preconditions hold, effects applied, untouched variables carried
over, and the goal true at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..core.poly import PolyBuilder, PolyObjective
from ..errors import InputError

__all__ = ["Action", "PlanningWeights", "PlanningProblem", "PlanningLayout",
           "map_planning", "simulate_plan", "NO_OP"]

NO_OP = "no-op"


@dataclass(frozen=True)
class Action:
    name: str
    preconditions: tuple[int, ...] = ()
    effects: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "preconditions", tuple(int(i) for i in self.preconditions))
        effects = tuple((int(i), bool(v)) for i, v in self.effects)
        seen: dict[int, bool] = {}
        for i, v in effects:
            if i in seen and seen[i] != v:
                raise InputError(f"action {self.name!r} sets variable {i} both ways")
            seen[i] = v
        object.__setattr__(self, "effects", effects)

    @property
    def effect_vars(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.effects)


@dataclass(frozen=True)
class PlanningWeights:
    goal: float = 1.0
    single_action: float = 1.0
    precondition: float = 1.0
    effects: float = 1.0
    noop: float = 1.0


@dataclass(frozen=True)
class PlanningProblem:
    variables: tuple[str, ...]
    initial: tuple[bool, ...]
    goal: tuple[int, ...]               # variable indices required True at the end
    actions: tuple[Action, ...]         # user actions; the mapper appends NO_OP
    horizon: int
    weights: PlanningWeights = field(default_factory=PlanningWeights)

    def __post_init__(self):
        n = len(self.variables)
        if n < 1:
            raise InputError("need at least one state variable")
        if len(self.initial) != n:
            raise InputError("initial state must assign every variable")
        if self.horizon < 1:
            raise InputError("horizon must be >= 1")
        for i in self.goal:
            if not 0 <= i < n:
                raise InputError(f"goal references unknown variable {i}")
        for action in self.actions:
            for i in action.preconditions:
                if not 0 <= i < n:
                    raise InputError(f"action {action.name!r} precondition on unknown variable {i}")
            for i, _ in action.effects:
                if not 0 <= i < n:
                    raise InputError(f"action {action.name!r} effect on unknown variable {i}")
        object.__setattr__(self, "initial", tuple(bool(v) for v in self.initial))
        object.__setattr__(self, "goal", tuple(sorted(set(int(i) for i in self.goal))))

    def to_dict(self) -> dict:
        return {
            "kind": "planning",
            "variables": list(self.variables),
            "initial": [int(v) for v in self.initial],
            "goal": list(self.goal),
            "actions": [
                {"name": a.name, "preconditions": list(a.preconditions),
                 "effects": [[i, int(v)] for i, v in a.effects]}
                for a in self.actions
            ],
            "horizon": self.horizon,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PlanningProblem":
        return cls(
            variables=tuple(data["variables"]),
            initial=tuple(bool(v) for v in data["initial"]),
            goal=tuple(data["goal"]),
            actions=tuple(
                Action(a["name"], tuple(a["preconditions"]),
                       tuple((i, bool(v)) for i, v in a["effects"]))
                for a in data["actions"]
            ),
            horizon=data["horizon"],
        )


@dataclass(frozen=True)
class PlanningLayout:
    """Free-bit indexing plus the pinned t=0 constants.

    x_i^(t), t in 1..L  ->  (t-1)*N + i
    y_j^(t), t in 1..L  ->  N*L + (t-1)*M + j       (M includes the no-op)
    """

    variables: tuple[str, ...]
    action_names: tuple[str, ...]       # with NO_OP appended
    horizon: int
    initial: tuple[bool, ...]
    goal: tuple[int, ...]

    @property
    def num_state_vars(self) -> int:
        return len(self.variables)

    @property
    def num_actions(self) -> int:
        return len(self.action_names)

    @property
    def num_free_bits(self) -> int:
        n, m, L = self.num_state_vars, self.num_actions, self.horizon
        return n * L + L * m

    @property
    def declared_bits(self) -> int:
        """Full time-indexed encoding size, pinned t=0 bits included."""
        n, m, L = self.num_state_vars, self.num_actions, self.horizon
        return n * (L + 1) + L * m

    def x_index(self, var: int, t: int) -> int:
        if t == 0:
            raise InputError("t=0 state bits are pinned to the initial state")
        return (t - 1) * self.num_state_vars + var

    def y_index(self, action: int, t: int) -> int:
        return self.num_state_vars * self.horizon + (t - 1) * self.num_actions + action

    def decode(self, bits: Sequence[int]) -> list[int | None]:
        """Action index chosen at each step; None where not exactly one fired."""
        plan: list[int | None] = []
        for t in range(1, self.horizon + 1):
            chosen = [j for j in range(self.num_actions) if bits[self.y_index(j, t)]]
            plan.append(chosen[0] if len(chosen) == 1 else None)
        return plan

    def decode_states(self, bits: Sequence[int]) -> list[tuple[int, ...]]:
        """State-bit trajectory including the pinned initial state."""
        rows = [tuple(int(v) for v in self.initial)]
        for t in range(1, self.horizon + 1):
            rows.append(tuple(int(bits[self.x_index(i, t)])
                              for i in range(self.num_state_vars)))
        return rows

    def to_dict(self) -> dict:
        return {
            "kind": "planning",
            "variables": list(self.variables),
            "action_names": list(self.action_names),
            "horizon": self.horizon,
            "initial": [int(v) for v in self.initial],
            "goal": list(self.goal),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PlanningLayout":
        return cls(
            variables=tuple(data["variables"]),
            action_names=tuple(data["action_names"]),
            horizon=data["horizon"],
            initial=tuple(bool(v) for v in data["initial"]),
            goal=tuple(data["goal"]),
        )


def map_planning(p: PlanningProblem) -> tuple[PolyObjective, PlanningLayout]:
    actions = tuple(p.actions) + (Action(NO_OP),)
    layout = PlanningLayout(
        variables=p.variables,
        action_names=tuple(a.name for a in actions),
        horizon=p.horizon,
        initial=p.initial,
        goal=p.goal,
    )
    n, m, L = layout.num_state_vars, layout.num_actions, p.horizon
    w = p.weights
    builder = PolyBuilder(layout.num_free_bits)

    # goal: sum (1 - x_i^(L))
    for i in p.goal:
        builder.add_constant(w.goal)
        builder.add((layout.x_index(i, L),), -w.goal)

    for t in range(1, L + 1):
        ys = [layout.y_index(j, t) for j in range(m)]

        # (sum_j y - 1)^2 = 1 - sum_j y + 2 sum_{j<k} y y
        builder.add_constant(w.single_action)
        for j in range(m):
            builder.add((ys[j],), -w.single_action)
            for k in range(j + 1, m):
                builder.add((ys[j], ys[k]), 2.0 * w.single_action)

        for j, action in enumerate(actions):
            # preconditions: y * (1 - x_i^(t-1))
            for i in action.preconditions:
                if t == 1:
                    if not p.initial[i]:
                        builder.add((ys[j],), w.precondition)
                else:
                    builder.add((ys[j],), w.precondition)
                    builder.add((ys[j], layout.x_index(i, t - 1)), -w.precondition)

            # effects: y * [x_i^(t) != v]
            for i, value in action.effects:
                xi = layout.x_index(i, t)
                if value:
                    builder.add((ys[j],), w.effects)
                    builder.add((ys[j], xi), -w.effects)
                else:
                    builder.add((ys[j], xi), w.effects)

            # frame: y * xor(x^(t-1), x^(t)) for variables the action leaves alone
            touched = action.effect_vars
            for i in range(n):
                if i in touched:
                    continue
                xi = layout.x_index(i, t)
                if t == 1:
                    prev = 1 if p.initial[i] else 0
                    # xor(c, x) = c + (1 - 2c) x
                    if prev:
                        builder.add((ys[j],), w.noop)
                    builder.add((ys[j], xi), w.noop * (1.0 - 2.0 * prev))
                else:
                    xprev = layout.x_index(i, t - 1)
                    builder.add((ys[j], xprev), w.noop)
                    builder.add((ys[j], xi), w.noop)
                    builder.add((ys[j], xprev, xi), -2.0 * w.noop)

    return builder.build(), layout


def simulate_plan(p: PlanningProblem, plan: Sequence[int | None]) -> bool:
    """Forward-simulation validator, independent of the polynomial encoding.

    ``plan`` holds action indices over the appended-no-op action list (index
    len(p.actions) is the no-op). Valid iff every step's preconditions hold,
    effects are applied, and the goal is true at the end.
    """
    if len(plan) != p.horizon:
        return False
    num_actions = len(p.actions) + 1
    state = list(p.initial)
    for step in plan:
        if step is None or not 0 <= step < num_actions:
            return False
        if step == len(p.actions):  # no-op
            continue
        action = p.actions[step]
        if not all(state[i] for i in action.preconditions):
            return False
        for i, value in action.effects:
            state[i] = value
    return all(state[i] for i in p.goal)
