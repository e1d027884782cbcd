"""Parametrized instance families.

``generate_instance(kind, params, seed)`` returns a JSON-ready instance dict;
the result is a pure function of (kind, params, seed). ``load_instance``
turns such a dict back into the mapper-level object.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from ..core.models import IsingModel
from ..embed.chimera import chimera
from ..errors import InputError
from ..mappers import (
    Action,
    ColoringInstance,
    EpsNetwork,
    PlanningProblem,
    SchedulingInstance,
    predicted_readouts,
)
from ..rng import substream

__all__ = ["generate_instance", "load_instance", "INSTANCE_KINDS"]

INSTANCE_KINDS = ("coloring", "planning", "scheduling", "eps",
                  "random-ising", "chimera-native-ising")


def _coloring(params: dict, rng) -> dict:
    n = int(params.get("num_vertices", 3))
    colors = int(params.get("num_colors", 3))
    graph = params.get("graph", "complete")
    if graph == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif graph == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(0, 1)][:max(0, n - 1)]
    elif graph == "random":
        p = float(params.get("edge_prob", 0.5))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    else:
        raise InputError(f"unknown coloring graph family {graph!r}")
    inst = ColoringInstance(
        num_vertices=n,
        edges=tuple(edges),
        num_colors=colors,
        w_onehot=float(params.get("w_onehot", 1.0)),
        w_conflict=float(params.get("w_conflict", 1.0)),
    )
    return inst.to_dict()


def _planning(params: dict, rng) -> dict:
    n = int(params.get("num_vars", 2))
    horizon = int(params.get("horizon", n))
    goal = int(params.get("goal_index", n - 1))
    actions = tuple(
        Action(f"set-{i}", preconditions=(i - 1,) if i else (), effects=((i, True),))
        for i in range(n)
    )
    problem = PlanningProblem(
        variables=tuple(f"v{i}" for i in range(n)),
        initial=(False,) * n,
        goal=(goal,),
        actions=actions,
        horizon=horizon,
    )
    return problem.to_dict()


def _scheduling(params: dict, rng) -> dict:
    n = int(params.get("num_jobs", 2))
    m = int(params.get("num_machines", 1))
    t = int(params.get("num_slots", 2))
    scale = float(params.get("priority_scale", 0.0))
    priority = []
    if scale > 0:
        for j in range(n):
            for slot in range(t):
                priority.append([[j, slot], round(float(rng.random()) * scale, 6)])
    prec_prob = float(params.get("precedence_prob", 0.0))
    precedences = []
    if prec_prob > 0:
        for a in range(n):
            for b in range(a + 1, n):  # index order keeps the graph acyclic
                if rng.random() < prec_prob:
                    precedences.append([a, b])
    inst = SchedulingInstance(
        num_jobs=n, num_machines=m, num_slots=t,
        priority=tuple((tuple(k), v) for k, v in priority),
        precedences=tuple(tuple(p) for p in precedences),
    )
    return inst.to_dict()


def _full_tree(branching: int, depth: int) -> tuple[list[int], list[int]]:
    parents = [-1]
    level = [0]
    for _ in range(depth):
        nxt = []
        for node in level:
            for _ in range(branching):
                parents.append(node)
                nxt.append(len(parents) - 1)
        level = nxt
    return parents, level  # level now holds the leaves


def _eps(params: dict, rng) -> dict:
    if "parents" in params:
        parents = [int(p) for p in params["parents"]]
        sensor_attach = [int(a) for a in params["sensor_attach"]]
    else:
        branching = int(params.get("branching", 4))
        depth = int(params.get("depth", 2))
        if branching < 1 or depth < 1:
            raise InputError("branching and depth must be >= 1")
        parents, leaves = _full_tree(branching, depth)
        sensor_attach = leaves

    net = EpsNetwork(
        parents=tuple(parents),
        sensor_attach=tuple(sensor_attach),
        lam_path=float(params.get("lam_path", 1.0)),
        lam_cb=float(params.get("lam_cb", 1.0)),
        lam_sensor=float(params.get("lam_sensor", 1.0)),
    )

    if "readouts" in params:
        readouts = tuple(int(l) for l in params["readouts"])
    else:
        cb_faults = set(int(i) for i in params.get("cb_faults", ()))
        sensor_faults = set(int(i) for i in params.get("sensor_faults", ()))
        num_cb = int(params.get("num_cb_faults", 0))
        if num_cb:
            cb_faults |= set(
                int(i) for i in rng.choice(net.num_cbs, size=num_cb, replace=False))
        health = [0 if i in cb_faults else 1 for i in range(net.num_cbs)]
        truth = predicted_readouts(net, health)
        # faulty sensors misreport: deterministic worst case (inverted truth)
        readouts = tuple(
            1 - truth[i] if i in sensor_faults else truth[i]
            for i in range(net.num_sensors))
    return net.with_readouts(readouts).to_dict()


def _random_ising(params: dict, rng) -> dict:
    n = int(params.get("num_spins", 16))
    density = float(params.get("density", 1.0))
    scale = float(params.get("scale", 1.0))
    if n < 1:
        raise InputError("num_spins must be >= 1")
    h = rng.uniform(-scale, scale, size=n)
    quadratic = {}
    for i in range(n):
        for j in range(i + 1, n):
            if density >= 1.0 or rng.random() < density:
                quadratic[(i, j)] = float(rng.uniform(-scale, scale))
    model = IsingModel(h, quadratic)
    return {"kind": "random-ising", "model": model.to_dict()}


def _chimera_native(params: dict, rng) -> dict:
    n = int(params.get("n", 1))
    broken = [int(b) for b in params.get("broken", ())]
    scale = float(params.get("scale", 1.0))
    hw = chimera(n, broken)
    dense = {node: idx for idx, node in enumerate(hw.nodes)}
    h = rng.uniform(-scale, scale, size=hw.num_nodes)
    quadratic = {
        (dense[u], dense[v]): float(rng.uniform(-scale, scale))
        for u, v in sorted(hw.edges())
    }
    model = IsingModel(h, quadratic)
    return {
        "kind": "chimera-native-ising",
        "model": model.to_dict(),
        "hardware": hw.to_dict(),
        "node_of_variable": list(hw.nodes),
    }


_GENERATORS = {
    "coloring": _coloring,
    "planning": _planning,
    "scheduling": _scheduling,
    "eps": _eps,
    "random-ising": _random_ising,
    "chimera-native-ising": _chimera_native,
}


def generate_instance(kind: str, params: dict[str, Any] | None = None, seed: int = 0) -> dict:
    """Deterministic instance dict from (kind, params, seed)."""
    if kind not in _GENERATORS:
        raise InputError(f"unknown instance kind {kind!r}; expected one of {INSTANCE_KINDS}")
    rng = substream(seed, "generate", kind)
    return _GENERATORS[kind](dict(params or {}), rng)


def load_instance(data: dict):
    """Instance dict -> (kind, mapper-level object)."""
    kind = data.get("kind")
    if kind == "coloring":
        return kind, ColoringInstance.from_dict(data)
    if kind == "planning":
        return kind, PlanningProblem.from_dict(data)
    if kind == "scheduling":
        return kind, SchedulingInstance.from_dict(data)
    if kind == "eps":
        return kind, EpsNetwork.from_dict(data)
    if kind in ("random-ising", "chimera-native-ising"):
        return kind, IsingModel.from_dict(data["model"])
    raise InputError(f"unknown instance kind {kind!r}")
