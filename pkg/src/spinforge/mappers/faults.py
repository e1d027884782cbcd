"""Electrical power-system fault diagnosis -> pseudo-Boolean objective.

The network is a rooted tree of circuit breakers (CBs); current flows from
the root and reaches a sensor iff every CB on the root-to-sensor path is
healthy. Health bits: x_i per CB, y_i per sensor (1 = healthy). Sensor
readouts l_i are inputs (1 = current seen).

The objective trades off fault count against consistency with the readouts:

  fault count:  lam_cb * sum (1 - x_i) + lam_sensor * sum (1 - y_i)
  consistency:  lam_path * sum_i y_i * xor(f_i, l_i),
                f_i = prod_{j in path(i)} x_j

A faulty sensor (y_i = 0) gates its own consistency term off: its readout
carries no information. Degree equals the longest path length plus one, so
the output generally needs degree reduction before solving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core.poly import PolyBuilder, PolyObjective
from ..errors import InputError

__all__ = ["EpsNetwork", "EpsLayout", "map_fault_diagnosis",
           "predicted_readouts", "diagnosis_consistent"]


@dataclass(frozen=True)
class EpsNetwork:
    parents: tuple[int, ...]          # parent CB index; -1 marks the root
    sensor_attach: tuple[int, ...]    # CB each sensor hangs off
    readouts: tuple[int, ...] | None = None   # l_i per sensor; needed to map
    lam_path: float = 1.0
    lam_cb: float = 1.0
    lam_sensor: float = 1.0

    def __post_init__(self):
        parents = tuple(int(p) for p in self.parents)
        n = len(parents)
        if n < 1:
            raise InputError("need at least one circuit breaker")
        roots = [i for i, p in enumerate(parents) if p == -1]
        if len(roots) != 1:
            raise InputError(f"expected exactly one root, found {len(roots)}")
        for i, p in enumerate(parents):
            if p != -1 and not 0 <= p < n:
                raise InputError(f"CB {i} has unknown parent {p}")
        # cycle check: every CB must reach the root
        for i in range(n):
            seen = set()
            j = i
            while parents[j] != -1:
                if j in seen:
                    raise InputError("breaker graph has a cycle")
                seen.add(j)
                j = parents[j]
        attach = tuple(int(a) for a in self.sensor_attach)
        if not attach:
            raise InputError("need at least one sensor")
        for a in attach:
            if not 0 <= a < n:
                raise InputError(f"sensor attached to unknown CB {a}")
        if self.readouts is not None:
            if len(self.readouts) != len(attach):
                raise InputError("need one readout per sensor")
            if any(l not in (0, 1) for l in self.readouts):
                raise InputError("readouts must be 0 or 1")
            object.__setattr__(self, "readouts", tuple(int(l) for l in self.readouts))
        if min(self.lam_path, self.lam_cb, self.lam_sensor) <= 0:
            raise InputError("penalty weights must be positive")
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "sensor_attach", attach)

    @property
    def num_cbs(self) -> int:
        return len(self.parents)

    @property
    def num_sensors(self) -> int:
        return len(self.sensor_attach)

    @property
    def root(self) -> int:
        return self.parents.index(-1)

    def path(self, sensor: int) -> tuple[int, ...]:
        """CB indices from the root down to the sensor's attachment point."""
        nodes = []
        j = self.sensor_attach[sensor]
        while True:
            nodes.append(j)
            if self.parents[j] == -1:
                break
            j = self.parents[j]
        return tuple(reversed(nodes))

    def with_readouts(self, readouts: Sequence[int]) -> "EpsNetwork":
        return EpsNetwork(self.parents, self.sensor_attach, tuple(readouts),
                          self.lam_path, self.lam_cb, self.lam_sensor)

    def to_dict(self) -> dict:
        return {
            "kind": "eps",
            "parents": list(self.parents),
            "sensor_attach": list(self.sensor_attach),
            "readouts": None if self.readouts is None else list(self.readouts),
            "lam_path": self.lam_path,
            "lam_cb": self.lam_cb,
            "lam_sensor": self.lam_sensor,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EpsNetwork":
        readouts = data.get("readouts")
        return cls(
            parents=tuple(data["parents"]),
            sensor_attach=tuple(data["sensor_attach"]),
            readouts=None if readouts is None else tuple(readouts),
            lam_path=data.get("lam_path", 1.0),
            lam_cb=data.get("lam_cb", 1.0),
            lam_sensor=data.get("lam_sensor", 1.0),
        )


@dataclass(frozen=True)
class EpsLayout:
    """Bit layout: CB health x_i at i, sensor health y_i at num_cbs + i."""

    num_cbs: int
    num_sensors: int

    @property
    def num_bits(self) -> int:
        return self.num_cbs + self.num_sensors

    def x_index(self, cb: int) -> int:
        return cb

    def y_index(self, sensor: int) -> int:
        return self.num_cbs + sensor

    def decode(self, bits: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(faulty CB ids, faulty sensor ids) from a health assignment."""
        faulty_cbs = tuple(i for i in range(self.num_cbs) if not bits[i])
        faulty_sensors = tuple(
            i for i in range(self.num_sensors) if not bits[self.num_cbs + i])
        return faulty_cbs, faulty_sensors

    def to_dict(self) -> dict:
        return {"kind": "eps", "num_cbs": self.num_cbs, "num_sensors": self.num_sensors}

    @classmethod
    def from_dict(cls, data: dict) -> "EpsLayout":
        return cls(data["num_cbs"], data["num_sensors"])


def map_fault_diagnosis(net: EpsNetwork) -> tuple[PolyObjective, EpsLayout]:
    if net.readouts is None:
        raise InputError("cannot map a diagnosis problem without sensor readouts")
    layout = EpsLayout(net.num_cbs, net.num_sensors)
    builder = PolyBuilder(layout.num_bits)

    for i in range(net.num_cbs):
        builder.add_constant(net.lam_cb)
        builder.add((layout.x_index(i),), -net.lam_cb)
    for i in range(net.num_sensors):
        builder.add_constant(net.lam_sensor)
        builder.add((layout.y_index(i),), -net.lam_sensor)

    # y_i * (l_i + f_i - 2 f_i l_i): with l=1 this is y - y*f, with l=0 y*f
    for i in range(net.num_sensors):
        y = layout.y_index(i)
        path_bits = tuple(layout.x_index(j) for j in net.path(i))
        if net.readouts[i]:
            builder.add((y,), net.lam_path)
            builder.add((y,) + path_bits, -net.lam_path)
        else:
            builder.add((y,) + path_bits, net.lam_path)

    return builder.build(), layout


def predicted_readouts(net: EpsNetwork, cb_health: Sequence[int]) -> tuple[int, ...]:
    """Forward current-flow simulation: sensor sees current iff its path is healthy."""
    return tuple(
        int(all(cb_health[j] for j in net.path(i))) for i in range(net.num_sensors))


def diagnosis_consistent(net: EpsNetwork, cb_health: Sequence[int],
                         sensor_health: Sequence[int]) -> bool:
    """Independent validator: healthy sensors must agree with the simulation."""
    if net.readouts is None:
        raise InputError("network carries no readouts")
    predicted = predicted_readouts(net, cb_health)
    return all(
        not sensor_health[i] or predicted[i] == net.readouts[i]
        for i in range(net.num_sensors))
