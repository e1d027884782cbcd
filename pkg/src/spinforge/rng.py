"""Named, reproducible random substreams.

All randomness in the package flows from a master seed through
:func:`substream`. A substream is addressed by a path of labels (strings or
ints), e.g. ``substream(seed, "sa", read_index)``. Streams for distinct paths
are statistically independent, and the derivation does not depend on creation
order, so work can be farmed out to any number of workers without changing
results.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["substream", "derive_seed", "random_spins"]

_MASK64 = (1 << 64) - 1


def _encode(part) -> int:
    if isinstance(part, (int, np.integer)):
        return int(part) & _MASK64
    if isinstance(part, str):
        digest = hashlib.sha256(part.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little")
    raise TypeError(f"substream path parts must be int or str, got {type(part)!r}")


def substream(master_seed: int, *path) -> np.random.Generator:
    """Return a PCG64 generator for the (master_seed, *path) substream."""
    entropy = [_encode(master_seed)] + [_encode(p) for p in path]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def derive_seed(master_seed: int, *path) -> int:
    """Collapse a substream address into a single 64-bit seed."""
    entropy = [_encode(master_seed)] + [_encode(p) for p in path]
    return int(np.random.SeedSequence(entropy).generate_state(2, np.uint32).view(np.uint64)[0])


def random_spins(rng: np.random.Generator, n: int) -> np.ndarray:
    """Draw n fair ±1 spins as int8."""
    return (rng.integers(0, 2, size=n, dtype=np.int8) * 2 - 1).astype(np.int8)
