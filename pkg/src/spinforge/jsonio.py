"""Canonical JSON helpers.

Reports and model files must round-trip bit-exactly and serialize to
byte-identical text for identical inputs, so everything goes through one
canonical encoder: sorted keys, no whitespace variation, floats via Python's
shortest round-trip repr.
"""

from __future__ import annotations

import json
from pathlib import Path

__all__ = ["canonical_dumps", "dump_path", "load_path"]


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=True) + "\n"


def dump_path(obj, path: str | Path) -> None:
    Path(path).write_text(canonical_dumps(obj), encoding="utf-8")


def load_path(path: str | Path):
    return json.loads(Path(path).read_text(encoding="utf-8"))
