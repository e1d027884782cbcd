"""Anneal schedules: discretized A(s), B(s) profiles.

A schedule holds ordered (s, A, B) control points with s running from 0 to 1,
interpolated piecewise-linearly. A weights the driver (transverse) term and
must vanish at s=1; B weights the problem term and must be positive there.
The nominal physical anneal time is carried as metadata only: engines operate
in Monte Carlo sweeps.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import InputError

__all__ = ["AnnealSchedule"]


@dataclass(frozen=True)
class AnnealSchedule:
    points: tuple[tuple[float, float, float], ...]
    t_f_microseconds: float | None = None

    def __post_init__(self):
        pts = tuple((float(s), float(a), float(b)) for s, a, b in self.points)
        if len(pts) < 2:
            raise InputError("schedule needs at least two points")
        s_values = [p[0] for p in pts]
        if s_values[0] != 0.0 or s_values[-1] != 1.0:
            raise InputError("schedule must span s = 0 .. 1")
        if any(s2 <= s1 for s1, s2 in zip(s_values, s_values[1:])):
            raise InputError("schedule s values must be strictly increasing")
        if any(a < 0 or b < 0 for _, a, b in pts):
            raise InputError("schedule weights must be non-negative")
        # An all-zero driver profile is allowed as a diagnostic mode (the
        # replicas then evolve as independent thermal chains); any schedule
        # with a driver must start with it dominant and switch it off by s=1.
        if any(a != 0.0 for _, a, _ in pts):
            if pts[0][1] <= 0:
                raise InputError("driver weight A(0) must be positive")
            if pts[-1][1] != 0.0:
                raise InputError("driver weight A(1) must be zero")
        if pts[-1][2] <= 0:
            raise InputError("problem weight B(1) must be positive")
        object.__setattr__(self, "points", pts)

    @classmethod
    def driverless(cls) -> "AnnealSchedule":
        """A == 0 throughout with the linear problem ramp B = s."""
        return cls(((0.0, 0.0, 0.0), (1.0, 0.0, 1.0)))

    @classmethod
    def default(cls) -> "AnnealSchedule":
        """Linear ramp A = 1 - s, B = s."""
        return cls(((0.0, 1.0, 0.0), (1.0, 0.0, 1.0)))

    def interpolate(self, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        s = np.asarray(s, dtype=np.float64)
        s_pts = np.array([p[0] for p in self.points])
        a_pts = np.array([p[1] for p in self.points])
        b_pts = np.array([p[2] for p in self.points])
        return np.interp(s, s_pts, a_pts), np.interp(s, s_pts, b_pts)

    # CSV rows "s,A,B"; a header line is tolerated on read.
    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("s,A,B\n")
        for s, a, b in self.points:
            out.write(f"{s!r},{a!r},{b!r}\n")
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str, t_f_microseconds: float | None = None) -> "AnnealSchedule":
        points = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise InputError(f"expected 3 comma-separated fields, got {line!r}")
            try:
                points.append(tuple(float(p) for p in parts))
            except ValueError:
                continue  # header
        return cls(tuple(points), t_f_microseconds)

    @classmethod
    def from_csv_path(cls, path: str | Path) -> "AnnealSchedule":
        return cls.from_csv(Path(path).read_text(encoding="utf-8"))
