"""End-to-end pipeline: map -> reduce -> convert -> embed -> solve -> decode.

The canonical run report contains only seed-determined quantities, so a rerun
with the same config is byte-identical regardless of worker count. Wall-clock
measurements (per-stage seconds, per-read time, and the time-to-solution they
imply) go to a separate timing record.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from ..core.bruteforce import brute_force
from ..core.convert import qubo_to_ising, spins_to_bits
from ..core.models import IsingModel, QuboModel
from ..core.reduce import reduce_degree
from ..core.samples import SampleSet
from ..embed.chimera import chimera
from ..embed.embedding import complete_graph_embedding, find_embedding, interaction_edges
from ..embed.physical import embed_ising, suggest_chain_strength, unembed
from ..errors import EmbeddingError, InputError, SpinforgeError
from ..jsonio import dump_path, load_path
from ..mappers import (
    PlanningWeights,
    ScheduleWeights,
    map_coloring,
    map_fault_diagnosis,
    map_planning,
    map_scheduling,
)
from ..rng import derive_seed
from .engines import EngineSpec
from .gaugeavg import gauge_average
from .generators import load_instance
from .stats import reads_to_solution, tts

__all__ = ["RunConfig", "RunResult", "StageFailure", "run_pipeline"]

ENERGY_TIE_TOL = 1e-9


class StageFailure(SpinforgeError):
    """A pipeline stage failed; carries the stage name and the cause's exit code."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", 1)


@dataclass(frozen=True)
class RunConfig:
    instance: dict[str, Any]            # inline instance (generators' format)
    engine: EngineSpec
    hardware: dict[str, Any] = field(default_factory=lambda: {"kind": "chimera", "n": 4})
    instance_path: str | None = None    # provenance only; `instance` is authoritative
    mapper_overrides: dict[str, Any] = field(default_factory=dict)
    penalty_weight: float | None = None
    embed_retries: int = 32
    alpha: float = 1.5
    chain_strength: float | None = None
    gauges: int = 1
    unembed_strategy: str = "majority"
    master_seed: int = 0
    oracle_cap: int = 24
    report_path: str | None = None
    samples_path: str | None = None
    timing_path: str | None = None

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "instance_path": self.instance_path,
            "engine": self.engine.to_dict(),
            "hardware": dict(self.hardware),
            "mapper_overrides": dict(self.mapper_overrides),
            "penalty_weight": self.penalty_weight,
            "embed_retries": self.embed_retries,
            "alpha": self.alpha,
            "chain_strength": self.chain_strength,
            "gauges": self.gauges,
            "unembed_strategy": self.unembed_strategy,
            "master_seed": self.master_seed,
            "oracle_cap": self.oracle_cap,
        }

    @classmethod
    def from_dict(cls, data: dict, base_dir: str | Path | None = None) -> "RunConfig":
        data = dict(data)
        instance = data.get("instance")
        instance_path = data.get("instance_path")
        if instance is None:
            if instance_path is None:
                raise InputError("config needs 'instance' or 'instance_path'")
            path = Path(instance_path)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            instance = load_path(path)
        if "engine" not in data:
            raise InputError("config needs an 'engine' section")
        return cls(
            instance=instance,
            instance_path=instance_path,
            engine=EngineSpec.from_dict(data["engine"]),
            hardware=data.get("hardware", {"kind": "chimera", "n": 4}),
            mapper_overrides=data.get("mapper_overrides", {}),
            penalty_weight=data.get("penalty_weight"),
            embed_retries=data.get("embed_retries", 32),
            alpha=data.get("alpha", 1.5),
            chain_strength=data.get("chain_strength"),
            gauges=data.get("gauges", 1),
            unembed_strategy=data.get("unembed_strategy", "majority"),
            master_seed=data.get("master_seed", 0),
            oracle_cap=data.get("oracle_cap", 24),
            report_path=data.get("report_path"),
            samples_path=data.get("samples_path"),
            timing_path=data.get("timing_path"),
        )


@dataclass(frozen=True)
class RunResult:
    report: dict
    timing: dict
    samples: SampleSet


def _apply_overrides(kind: str, instance, overrides: dict):
    if not overrides:
        return instance
    if kind in ("coloring", "eps"):
        return dataclasses.replace(instance, **overrides)
    if kind == "scheduling":
        merged = dataclasses.asdict(instance.weights)
        merged.update(overrides)
        return dataclasses.replace(instance, weights=ScheduleWeights(**merged))
    if kind == "planning":
        merged = dataclasses.asdict(instance.weights)
        merged.update(overrides)
        return dataclasses.replace(instance, weights=PlanningWeights(**merged))
    raise InputError(f"mapper overrides are not supported for kind {kind!r}")


def _map_stage(kind: str, instance):
    """-> (poly_or_none, qubo_or_none, ising_or_none, layout_or_none)."""
    if kind == "coloring":
        qubo, layout = map_coloring(instance)
        return None, qubo, None, layout
    if kind == "scheduling":
        qubo, layout = map_scheduling(instance)
        return None, qubo, None, layout
    if kind == "planning":
        poly, layout = map_planning(instance)
        return poly, None, None, layout
    if kind == "eps":
        poly, layout = map_fault_diagnosis(instance)
        return poly, None, None, layout
    return None, None, instance, None  # already an Ising model


def _decode_best(kind: str, layout, num_original: int, best_spins: np.ndarray) -> dict:
    bits = spins_to_bits(best_spins)[:num_original]
    if layout is None:
        return {"assignment": [int(s) for s in best_spins]}
    if kind == "coloring":
        return {"colors": layout.decode(bits)}
    if kind == "scheduling":
        placed = layout.decode(bits)
        return {"schedule": [list(p) if p is not None else None for p in placed]}
    if kind == "planning":
        plan = layout.decode(bits)
        return {"plan": [layout.action_names[j] if j is not None else None for j in plan]}
    if kind == "eps":
        faulty_cbs, faulty_sensors = layout.decode(bits)
        return {"faulty_cbs": list(faulty_cbs), "faulty_sensors": list(faulty_sensors)}
    return {"bits": [int(b) for b in bits]}


def run_pipeline(cfg: RunConfig, workers: int | None = None) -> RunResult:
    timing: dict[str, float] = {}

    def stage(name, fn):
        start = time.perf_counter()
        try:
            out = fn()
        except SpinforgeError as exc:
            raise StageFailure(name, exc) from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise StageFailure(name, InputError(str(exc))) from exc
        timing[name] = time.perf_counter() - start
        return out

    kind, instance = stage("load", lambda: load_instance(cfg.instance))
    instance = stage("load", lambda: _apply_overrides(kind, instance, cfg.mapper_overrides))
    poly, qubo, ising, layout = stage("map", lambda: _map_stage(kind, instance))

    if poly is not None:
        num_original = poly.num_vars
        qubo, ancilla_map = stage(
            "reduce", lambda: reduce_degree(poly, cfg.penalty_weight))
    else:
        ancilla_map = {}
        num_original = qubo.num_vars if qubo is not None else ising.num_vars

    logical = ising if ising is not None else stage("convert", lambda: qubo_to_ising(qubo))

    oracle = None
    if logical.num_vars <= cfg.oracle_cap:
        gs = stage("oracle", lambda: brute_force(logical, cap=cfg.oracle_cap,
                                                 tol=ENERGY_TIE_TOL))
        oracle = {"min_energy": gs.min_energy, "num_ground_states": gs.count}

    hw = stage("hardware", lambda: chimera(
        cfg.hardware.get("n", 4), cfg.hardware.get("broken", ())))

    def _find_embedding():
        # chain growth first; on dense graphs it may exhaust its retries, in
        # which case the deterministic complete-graph construction is a
        # guaranteed (if larger) fallback on unbroken hardware
        try:
            return "chain-growth", find_embedding(
                logical.num_vars, interaction_edges(logical), hw,
                seed=derive_seed(cfg.master_seed, "embed"), retries=cfg.embed_retries)
        except EmbeddingError:
            if not hw.broken and logical.num_vars <= 4 * hw.n:
                return "clique-fallback", complete_graph_embedding(logical.num_vars, hw)
            raise

    embed_method, emb = stage("embed", _find_embedding)
    j_f = cfg.chain_strength
    if j_f is None:
        j_f = stage("embed", lambda: suggest_chain_strength(logical, emb, cfg.alpha))
    embedded = stage("embed", lambda: embed_ising(logical, emb, j_f))

    engine = EngineSpec(cfg.engine.kind, {
        **cfg.engine.params, "seed": derive_seed(cfg.master_seed, "solve")})
    num_gauges = max(1, cfg.gauges)

    solve_start = time.perf_counter()
    physical_samples = stage("solve", lambda: gauge_average(
        embedded.physical, engine, num_gauges,
        seed=derive_seed(cfg.master_seed, "gauge-avg"), workers=workers))
    solver_seconds = time.perf_counter() - solve_start

    logical_samples = stage("unembed", lambda: unembed(
        physical_samples, embedded, cfg.unembed_strategy,
        seed=derive_seed(cfg.master_seed, "unembed")))

    total_reads = physical_samples.total_reads
    reads_per_gauge = engine.reads_per_run()

    results: dict[str, Any] = {
        "reads": total_reads,
        "reads_per_gauge": reads_per_gauge,
        "num_gauges": num_gauges,
        "chain_break_fraction": logical_samples.provenance["chain_break_fraction"],
        "reads_discarded": logical_samples.provenance["reads_discarded"],
    }
    decoded: dict[str, Any] = {}
    if len(logical_samples):
        best_spins, best_energy = logical_samples.best()
        results["best_energy"] = best_energy
        decoded = stage("decode", lambda: _decode_best(
            kind, layout, num_original, best_spins))
    else:
        results["best_energy"] = None

    if oracle is not None:
        target = oracle["min_energy"]
        if len(logical_samples):
            hits = int(logical_samples.counts[
                logical_samples.energies <= target + ENERGY_TIE_TOL].sum())
        else:
            hits = 0
        p = hits / total_reads
        results["success_probability"] = p
        results["tts99_reads"] = reads_to_solution(p)
        gauge_success = []
        for g_idx in range(num_gauges):
            if len(logical_samples) and logical_samples.origins is not None:
                mask = logical_samples.origins[:, 0] == g_idx
                g_hits = int(logical_samples.counts[
                    mask & (logical_samples.energies <= target + ENERGY_TIE_TOL)].sum())
            else:
                g_hits = 0
            gauge_success.append(g_hits / reads_per_gauge)
        results["gauge_success"] = gauge_success
        results["gauge_variance"] = float(np.var(gauge_success))
    else:
        results["success_probability"] = None
        results["tts99_reads"] = None
        results["gauge_success"] = None
        results["gauge_variance"] = None

    report = {
        "config": cfg.to_dict(),
        "problem": {
            "kind": kind,
            "num_original_bits": num_original,
            "num_ancillas": len(ancilla_map),
            "num_logical_vars": logical.num_vars,
        },
        "embedding": {
            "method": embed_method,
            "num_physical_qubits": len(embedded.nodes),
            "max_chain_length": emb.max_chain_length,
            "chain_strength": embedded.chain_strength,
            "num_chain_edges": embedded.num_chain_edges,
        },
        "oracle": oracle,
        "results": results,
        "decoded": decoded,
    }

    t_read = solver_seconds / total_reads if total_reads else 0.0
    timing_record = {
        "stage_seconds": timing,
        "solver_seconds": solver_seconds,
        "t_read_seconds": t_read,
        "tts99_seconds": (
            tts(results["success_probability"], t_read)
            if results["success_probability"] is not None else None),
    }

    if cfg.report_path:
        dump_path(report, cfg.report_path)
    if cfg.samples_path:
        dump_path(logical_samples.to_dict(), cfg.samples_path)
    if cfg.timing_path:
        dump_path(timing_record, cfg.timing_path)
    return RunResult(report=report, timing=timing_record, samples=logical_samples)
