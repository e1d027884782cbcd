"""Kernel backend selection.

The hot inner loops (Metropolis sweeps and exhaustive enumeration) exist
twice: a compiled Cython extension (``spinforge._kernels``) and a pure-Python
mirror (``spinforge._kernels_py``). Both consume pre-drawn uniform variates
and perform arithmetic in the same order, so they produce bit-identical
samples; the compiled one is just orders of magnitude faster
(``benchmarks/backend_bench.py`` quantifies the gap).

Selection happens at import: the extension if available, else the fallback.
``SPINFORGE_BACKEND=pure`` forces the fallback; ``SPINFORGE_BACKEND=compiled``
makes a missing extension a hard error.
"""

from __future__ import annotations

import os

__all__ = ["kernels", "BACKEND"]

_forced = os.environ.get("SPINFORGE_BACKEND")

if _forced == "pure":
    from . import _kernels_py as kernels

    BACKEND = "pure"
elif _forced in (None, "", "compiled"):
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        from . import _kernels_py as kernels

        BACKEND = "pure"
else:
    raise RuntimeError(f"SPINFORGE_BACKEND must be 'pure' or 'compiled', got {_forced!r}")
