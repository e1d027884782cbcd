"""Minor embeddings: logical variables onto connected physical chains.

Two constructors:

* :func:`find_embedding` — seeded chain-growth heuristic. Variables are
  placed in descending interaction-degree order, preferring (within that
  order) variables that already have a placed neighbor so chains can anchor
  instead of landing blind; each chain starts at a free qubit adjacent to the
  first already-placed neighbor chain and BFS-extends through free qubits
  until it touches every placed neighbor. Failed attempts retry with fresh
  seeded randomness.
* :func:`complete_graph_embedding` — the deterministic diagonal construction
  for K_N on an unbroken Chimera grid: chains of length m+1 on the top-left
  m x m subgrid (m = ceil(N/4)), N*(m+1) <= N**2 qubits for N >= 2.

Every returned embedding has been machine-checked: chains are vertex-disjoint
and connected, and each required logical edge has at least one physical edge
between the two chains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from ..errors import EmbeddingError, InputError
from ..rng import substream
from .chimera import HardwareGraph, chimera_node_id

__all__ = ["Embedding", "find_embedding", "complete_graph_embedding", "interaction_edges"]


def interaction_edges(model) -> list[tuple[int, int]]:
    """The logical interaction graph of a quadratic model's nonzero couplings."""
    return sorted(model.quadratic.keys())


@dataclass(frozen=True)
class Embedding:
    chains: dict[int, tuple[int, ...]]
    hardware: HardwareGraph

    def __post_init__(self):
        object.__setattr__(
            self, "chains",
            {int(v): tuple(sorted(int(q) for q in chain)) for v, chain in self.chains.items()})

    @property
    def total_qubits(self) -> int:
        return sum(len(c) for c in self.chains.values())

    @property
    def max_chain_length(self) -> int:
        return max((len(c) for c in self.chains.values()), default=0)

    def validate(self, required_edges: Iterable[tuple[int, int]] = ()) -> None:
        """Check disjointness, chain connectivity, and edge coverage."""
        adjacency = self.hardware.adjacency
        seen: set[int] = set()
        for var, chain in self.chains.items():
            if not chain:
                raise EmbeddingError(f"variable {var} has an empty chain")
            for q in chain:
                if q not in adjacency:
                    raise EmbeddingError(f"chain of {var} uses unknown/broken qubit {q}")
                if q in seen:
                    raise EmbeddingError(f"qubit {q} appears in more than one chain")
                seen.add(q)
            members = set(chain)
            reached = {chain[0]}
            frontier = [chain[0]]
            while frontier:
                q = frontier.pop()
                for w in adjacency[q]:
                    if w in members and w not in reached:
                        reached.add(w)
                        frontier.append(w)
            if reached != members:
                raise EmbeddingError(f"chain of {var} is not connected")
        for i, j in required_edges:
            if i not in self.chains or j not in self.chains:
                raise EmbeddingError(f"edge ({i},{j}) references an unmapped variable")
            if not self._chains_touch(i, j):
                raise EmbeddingError(f"no physical edge available for logical edge ({i},{j})")

    def _chains_touch(self, i: int, j: int) -> bool:
        other = set(self.chains[j])
        return any(w in other for q in self.chains[i] for w in self.hardware.adjacency[q])

    def connecting_edges(self, i: int, j: int) -> list[tuple[int, int]]:
        """Physical edges between chain(i) and chain(j), canonically sorted."""
        other = set(self.chains[j])
        found = {
            (q, w) if q < w else (w, q)
            for q in self.chains[i]
            for w in self.hardware.adjacency[q]
            if w in other
        }
        return sorted(found)

    def to_dict(self) -> dict:
        return {
            "chains": {str(v): list(chain) for v, chain in sorted(self.chains.items())},
            "hardware": self.hardware.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Embedding":
        hw = HardwareGraph.from_dict(data["hardware"])
        chains = {int(v): tuple(chain) for v, chain in data["chains"].items()}
        return cls(chains, hw)


def _bfs_extend(chain: set[int], target: set[int], free: set[int],
                adjacency: dict[int, tuple[int, ...]]) -> list[int] | None:
    """Shortest free-qubit path from `chain` to a qubit adjacent to `target`."""
    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for q in sorted(chain):
        for w in adjacency[q]:
            if w in free and w not in parent:
                parent[w] = None
                queue.append(w)
    while queue:
        x = queue.popleft()
        if any(w in target for w in adjacency[x]):
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path
        for w in adjacency[x]:
            if w in free and w not in parent:
                parent[w] = x
                queue.append(w)
    return None


def _grow_attempt(order, logical_nbrs, hw: HardwareGraph, rng):
    free = set(hw.nodes)
    chains: dict[int, set[int]] = {}
    adjacency = hw.adjacency
    for var in order:
        placed = sorted(u for u in logical_nbrs[var] if u in chains)
        candidates: list[int] = []
        if placed:
            anchor = chains[placed[0]]
            candidates = sorted({w for q in anchor for w in adjacency[q] if w in free})
        if not candidates:
            # anchor neighborhood exhausted (or nothing placed yet): start
            # anywhere free and let the BFS extensions do the routing
            candidates = sorted(free)
        if not candidates:
            return None
        start = candidates[int(rng.integers(len(candidates)))]
        chain = {start}
        free.discard(start)
        for u in placed:
            target = chains[u]
            if any(w in target for q in chain for w in adjacency[q]):
                continue
            # grow whichever side reaches the other through free qubits
            path = _bfs_extend(chain, target, free, adjacency)
            if path is not None:
                chain.update(path)
                free.difference_update(path)
                continue
            path = _bfs_extend(target, chain, free, adjacency)
            if path is None:
                return None
            target.update(path)
            free.difference_update(path)

        # reserve adjacency capacity for the neighbors still to come: a
        # hardware qubit offers at most 6 couplers, so high-degree variables
        # must occupy longer chains before their neighborhood saturates
        unplaced = sum(1 for u in logical_nbrs[var] if u not in chains)
        while _free_adjacency(chain, free, adjacency) < unplaced:
            frontier = sorted({w for q in chain for w in adjacency[q] if w in free})
            if not frontier:
                break
            grown = max(frontier, key=lambda w: (sum(1 for x in adjacency[w] if x in free), -w))
            chain.add(grown)
            free.discard(grown)
        chains[var] = chain
    return {v: tuple(sorted(c)) for v, c in chains.items()}


def _free_adjacency(chain: set[int], free: set[int], adjacency) -> int:
    return len({w for q in chain for w in adjacency[q] if w in free})


def find_embedding(num_vars: int, edges: Iterable[tuple[int, int]], hw: HardwareGraph,
                   seed: int = 0, retries: int = 32) -> Embedding:
    """Seeded chain-growth embedding of an interaction graph into hardware.

    Deterministic given the seed: attempts draw from substreams
    (seed, "embed", attempt) and the first success wins. Raises
    EmbeddingError when the retry budget is exhausted.
    """
    if num_vars < 1:
        raise InputError("need at least one logical variable")
    edge_set = set()
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j or not (0 <= i < num_vars and 0 <= j < num_vars):
            raise InputError(f"bad logical edge ({i},{j})")
        edge_set.add((min(i, j), max(i, j)))
    degree = [0] * num_vars
    logical_nbrs: list[set[int]] = [set() for _ in range(num_vars)]
    for i, j in edge_set:
        degree[i] += 1
        degree[j] += 1
        logical_nbrs[i].add(j)
        logical_nbrs[j].add(i)

    # degree-major placement order, preferring variables whose neighborhood
    # is already placed (anchored chains beat blind placement)
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(num_vars))
    while remaining:
        anchored = [v for v in remaining if logical_nbrs[v] & placed]
        pool = anchored if anchored else sorted(remaining)
        pick = min(pool, key=lambda v: (-degree[v], v))
        order.append(pick)
        placed.add(pick)
        remaining.discard(pick)

    for attempt in range(max(1, retries)):
        rng = substream(seed, "embed", attempt)
        chains = _grow_attempt(order, logical_nbrs, hw, rng)
        if chains is not None:
            emb = Embedding(chains, hw)
            emb.validate(sorted(edge_set))
            return emb
    raise EmbeddingError(
        f"no embedding found for {num_vars} variables / {len(edge_set)} edges "
        f"within {retries} attempts")


def complete_graph_embedding(num_vars: int, hw: HardwareGraph) -> Embedding:
    """Deterministic K_N embedding on an unbroken Chimera grid.

    Variable v = 4a + k gets the L-shaped chain: vertical qubits
    (rows 0..a, col a, side 0, index k) plus horizontal qubits
    (row a, cols a..m-1, side 1, index k) on the m x m subgrid, m = ceil(N/4).
    """
    if num_vars < 1:
        raise InputError("need at least one logical variable")
    if hw.kind != "chimera":
        raise EmbeddingError("complete-graph construction requires a Chimera graph")
    if hw.broken:
        raise EmbeddingError("complete-graph construction requires an unbroken graph")
    if num_vars == 1:
        return Embedding({0: (hw.nodes[0],)}, hw)
    m = -(-num_vars // 4)
    if m > hw.n:
        raise EmbeddingError(
            f"K_{num_vars} needs a {m}x{m} cell grid; hardware has {hw.n}x{hw.n}")
    n = hw.n
    chains: dict[int, tuple[int, ...]] = {}
    for v in range(num_vars):
        a, k = divmod(v, 4)
        vertical = [chimera_node_id(n, r, a, 0, k) for r in range(a + 1)]
        horizontal = [chimera_node_id(n, a, c, 1, k) for c in range(a, m)]
        chains[v] = tuple(sorted(vertical + horizontal))
    emb = Embedding(chains, hw)
    emb.validate([(i, j) for i in range(num_vars) for j in range(i + 1, num_vars)])
    return emb
