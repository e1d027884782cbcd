"""Benchmark statistics."""

from __future__ import annotations

import math

from ..errors import InputError

__all__ = ["tts", "reads_to_solution"]


def reads_to_solution(p: float, confidence: float = 0.99) -> float:
    """Expected number of reads to hit the optimum with the given confidence.

    ln(1 - confidence) / ln(1 - p); 1 if p == 1, +inf if p == 0.
    """
    if not 0.0 <= p <= 1.0:
        raise InputError(f"success probability must be in [0,1], got {p}")
    if p == 0.0:
        return math.inf
    if p == 1.0:
        return 1.0
    return math.log(1.0 - confidence) / math.log(1.0 - p)


def tts(p: float, t_read: float, confidence: float = 0.99) -> float:
    """Time-to-solution: t_read * ln(1-confidence)/ln(1-p) seconds.

    Degenerate cases follow the repeated-trial model: one read suffices at
    p = 1; no finite time exists at p = 0.
    """
    if t_read < 0:
        raise InputError("t_read must be non-negative")
    r = reads_to_solution(p, confidence)
    return t_read if r == 1.0 else t_read * r
