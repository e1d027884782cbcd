"""Chimera hardware graphs.

An n x n grid of unit cells, each a complete bipartite K_{4,4}: node ids are
assigned cell-major, then side, then in-cell index,

    id(row, col, side, k) = 8 * (row * n + col) + 4 * side + k,

with side 0 qubits coupling to the vertically adjacent cells and side 1
qubits to the horizontally adjacent ones (same k). A broken-node mask removes
nodes and their incident couplers. Degree is at most 6: 4 in-cell plus 2
inter-cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import InputError

__all__ = ["HardwareGraph", "chimera", "chimera_node_id"]


def chimera_node_id(n: int, row: int, col: int, side: int, k: int) -> int:
    return 8 * (row * n + col) + 4 * side + k


@dataclass(frozen=True)
class HardwareGraph:
    kind: str
    n: int
    broken: frozenset[int]
    nodes: tuple[int, ...]
    adjacency: dict[int, tuple[int, ...]]

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def edges(self):
        for u, nbrs in self.adjacency.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(v) for v in self.adjacency.values()), default=0)

    def edge_list_text(self) -> str:
        """Plain-text export: one "u v" line per edge, sorted."""
        return "".join(f"{u} {v}\n" for u, v in sorted(self.edges()))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "broken": sorted(self.broken)}

    @classmethod
    def from_dict(cls, data: dict) -> "HardwareGraph":
        if data.get("kind") != "chimera":
            raise InputError(f"unknown hardware kind {data.get('kind')!r}")
        return chimera(data["n"], data.get("broken", ()))


def chimera(n: int, broken: Iterable[int] = ()) -> HardwareGraph:
    """Build Chimera(n) with the given broken nodes masked out."""
    if n < 1:
        raise InputError("cell grid size must be >= 1")
    total = 8 * n * n
    broken_set = frozenset(int(b) for b in broken)
    for b in broken_set:
        if not 0 <= b < total:
            raise InputError(f"broken node {b} outside [0, {total})")

    working = [u for u in range(total) if u not in broken_set]
    neighbors: dict[int, list[int]] = {u: [] for u in working}

    def connect(u: int, v: int) -> None:
        if u in neighbors and v in neighbors:
            neighbors[u].append(v)
            neighbors[v].append(u)

    for row in range(n):
        for col in range(n):
            for k in range(4):
                u = chimera_node_id(n, row, col, 0, k)
                for k2 in range(4):
                    connect(u, chimera_node_id(n, row, col, 1, k2))
            if row + 1 < n:
                for k in range(4):
                    connect(chimera_node_id(n, row, col, 0, k),
                            chimera_node_id(n, row + 1, col, 0, k))
            if col + 1 < n:
                for k in range(4):
                    connect(chimera_node_id(n, row, col, 1, k),
                            chimera_node_id(n, row, col + 1, 1, k))

    adjacency = {u: tuple(sorted(nbrs)) for u, nbrs in neighbors.items()}
    return HardwareGraph(
        kind="chimera",
        n=n,
        broken=broken_set,
        nodes=tuple(working),
        adjacency=adjacency,
    )
