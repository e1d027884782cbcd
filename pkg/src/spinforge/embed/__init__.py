"""Hardware topology modeling and minor embedding."""

from .chimera import HardwareGraph, chimera, chimera_node_id
from .embedding import Embedding, complete_graph_embedding, find_embedding, interaction_edges
from .physical import EmbeddedIsing, embed_ising, suggest_chain_strength, unembed

__all__ = [
    "HardwareGraph",
    "chimera",
    "chimera_node_id",
    "Embedding",
    "find_embedding",
    "complete_graph_embedding",
    "interaction_edges",
    "EmbeddedIsing",
    "embed_ising",
    "suggest_chain_strength",
    "unembed",
]
