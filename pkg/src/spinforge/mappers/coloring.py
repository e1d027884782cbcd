"""Graph coloring -> QUBO.

One bit x_{v,c} per (vertex, color). Two penalty families: each vertex must
take exactly one color, (sum_c x_{v,c} - 1)^2, and adjacent vertices must not
share one, x_{v,c} x_{v',c}. Proper colorings sit exactly at energy 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..core.models import QuboModel
from ..errors import InputError

__all__ = ["ColoringInstance", "ColoringLayout", "map_coloring", "is_proper_coloring"]


@dataclass(frozen=True)
class ColoringInstance:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    num_colors: int
    w_onehot: float = 1.0
    w_conflict: float = 1.0

    def __post_init__(self):
        if self.num_vertices < 1:
            raise InputError("need at least one vertex")
        if self.num_colors < 1:
            raise InputError("need at least one color")
        if self.w_onehot <= 0 or self.w_conflict <= 0:
            raise InputError("penalty weights must be positive")
        clean = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InputError(f"edge ({u},{v}) references an unknown vertex")
            clean.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(set(clean))))

    def to_dict(self) -> dict:
        return {
            "kind": "coloring",
            "num_vertices": self.num_vertices,
            "edges": [list(e) for e in self.edges],
            "num_colors": self.num_colors,
            "w_onehot": self.w_onehot,
            "w_conflict": self.w_conflict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ColoringInstance":
        return cls(
            num_vertices=data["num_vertices"],
            edges=tuple(tuple(e) for e in data["edges"]),
            num_colors=data["num_colors"],
            w_onehot=data.get("w_onehot", 1.0),
            w_conflict=data.get("w_conflict", 1.0),
        )


@dataclass(frozen=True)
class ColoringLayout:
    """Bit layout: x_{v,c} lives at index v * num_colors + c."""

    num_vertices: int
    num_colors: int

    @property
    def num_bits(self) -> int:
        return self.num_vertices * self.num_colors

    def index(self, vertex: int, color: int) -> int:
        return vertex * self.num_colors + color

    def decode(self, bits: Sequence[int]) -> list[int | None]:
        """Vertex colors; None where a vertex has not exactly one color bit set."""
        colors: list[int | None] = []
        for v in range(self.num_vertices):
            chosen = [c for c in range(self.num_colors) if bits[self.index(v, c)]]
            colors.append(chosen[0] if len(chosen) == 1 else None)
        return colors

    def to_dict(self) -> dict:
        return {"kind": "coloring", "num_vertices": self.num_vertices,
                "num_colors": self.num_colors}

    @classmethod
    def from_dict(cls, data: dict) -> "ColoringLayout":
        return cls(data["num_vertices"], data["num_colors"])


def map_coloring(inst: ColoringInstance) -> tuple[QuboModel, ColoringLayout]:
    layout = ColoringLayout(inst.num_vertices, inst.num_colors)
    linear = np.zeros(layout.num_bits)
    quadratic: dict[tuple[int, int], float] = {}
    offset = 0.0

    def add_quad(a: int, b: int, value: float) -> None:
        key = (min(a, b), max(a, b))
        quadratic[key] = quadratic.get(key, 0.0) + value

    # (sum_c x - 1)^2 = 1 - sum_c x + 2 sum_{c<c'} x x   (using x^2 = x)
    for v in range(inst.num_vertices):
        offset += inst.w_onehot
        for c in range(inst.num_colors):
            linear[layout.index(v, c)] -= inst.w_onehot
            for c2 in range(c + 1, inst.num_colors):
                add_quad(layout.index(v, c), layout.index(v, c2), 2.0 * inst.w_onehot)

    for u, v in inst.edges:
        for c in range(inst.num_colors):
            add_quad(layout.index(u, c), layout.index(v, c), inst.w_conflict)

    return QuboModel(linear, quadratic, offset), layout


def is_proper_coloring(inst: ColoringInstance, colors: Iterable[int | None]) -> bool:
    """Independent validator: everything colored, no edge monochromatic."""
    colors = list(colors)
    if len(colors) != inst.num_vertices:
        return False
    if any(c is None or not (0 <= c < inst.num_colors) for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in inst.edges)
