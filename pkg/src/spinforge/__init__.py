"""spinforge: compile combinatorial problems to QUBO/Ising form, minor-embed
them onto Chimera hardware graphs, and solve them with annealing-style
samplers."""

from .backend import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
