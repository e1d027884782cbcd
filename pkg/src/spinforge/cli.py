"""Command-line interface.

Subcommands: generate, map, embed, solve, pipeline, report. Exit codes:
0 success, 2 input error, 3 capacity error, 4 embedding error, 5 solver
error, 1 anything unexpected. Worker count comes from SPINFORGE_WORKERS
unless a command-level --workers is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bench import EngineSpec, RunConfig, generate_instance, load_instance, run_pipeline
from .core.convert import qubo_to_ising, spins_to_bits
from .core.models import IsingModel, QuboModel
from .core.reduce import reduce_degree
from .core.samples import SampleSet
from .embed.chimera import chimera
from .embed.embedding import find_embedding
from .errors import InputError, SpinforgeError
from .jsonio import canonical_dumps, dump_path, load_path
from .mappers import map_coloring, map_fault_diagnosis, map_planning, map_scheduling

__all__ = ["main"]


def _emit(payload: dict, out: str | None) -> None:
    text = canonical_dumps(payload)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_params(args) -> dict:
    if getattr(args, "params_file", None):
        return load_path(args.params_file)
    if getattr(args, "params", None):
        try:
            return json.loads(args.params)
        except json.JSONDecodeError as exc:
            raise InputError(f"--params is not valid JSON: {exc}") from exc
    return {}


def cmd_generate(args) -> int:
    instance = generate_instance(args.kind, _parse_params(args), args.seed)
    _emit(instance, args.out)
    return 0


def cmd_map(args) -> int:
    data = load_path(args.instance)
    kind, instance = load_instance(data)
    if kind == "coloring":
        qubo, layout = map_coloring(instance)
        poly = None
    elif kind == "scheduling":
        qubo, layout = map_scheduling(instance)
        poly = None
    elif kind == "planning":
        poly, layout = map_planning(instance)
    elif kind == "eps":
        poly, layout = map_fault_diagnosis(instance)
    else:
        _emit(instance.to_dict(), args.out_model)
        if args.out_varmap:
            dump_path({"kind": "identity", "num_original_bits": instance.num_vars,
                       "ancillas": []}, args.out_varmap)
        return 0

    if poly is not None:
        num_original = poly.num_vars
        qubo, ancilla_map = reduce_degree(poly, args.penalty_weight)
    else:
        num_original = qubo.num_vars
        ancilla_map = {}
    _emit(qubo.to_dict(), args.out_model)
    if args.out_varmap:
        dump_path({
            "kind": kind,
            "layout": layout.to_dict(),
            "num_original_bits": num_original,
            "ancillas": [[anc, list(pair)] for anc, pair in sorted(ancilla_map.items())],
        }, args.out_varmap)
    return 0


def _load_model(path: str, domain: str):
    data = load_path(path)
    if domain == "qubo":
        return QuboModel.from_dict(data)
    if domain == "ising":
        return IsingModel.from_dict(data)
    raise InputError(f"unknown model domain {domain!r}")


def _parse_broken(text: str | None) -> list[int]:
    if not text:
        return []
    path = Path(text)
    if path.exists():
        return [int(x) for x in load_path(path)]
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_embed(args) -> int:
    model = _load_model(args.model, args.domain)
    hw = chimera(args.chimera_n, _parse_broken(args.broken))
    emb = find_embedding(model.num_vars, sorted(model.quadratic.keys()), hw,
                         seed=args.seed, retries=args.retries)
    _emit(emb.to_dict(), args.out)
    return 0


def cmd_solve(args) -> int:
    model = _load_model(args.model, args.domain)
    ising = qubo_to_ising(model) if args.domain == "qubo" else model
    spec = EngineSpec(args.engine, json.loads(args.params) if args.params else {})
    samples = spec.run(ising, seed=args.seed, workers=args.workers)
    if args.domain == "qubo":
        bits = spins_to_bits(samples.assignments)
        samples = SampleSet(
            domain="binary",
            assignments=bits,
            energies=model.evaluate_batch(bits),
            counts=samples.counts,
            provenance=samples.provenance,
            origins=samples.origins,
        )
    _emit(samples.to_dict(), args.out)
    return 0


def cmd_pipeline(args) -> int:
    cfg = RunConfig.from_dict(load_path(args.config), base_dir=Path(args.config).parent)
    overrides = {}
    if args.report:
        overrides["report_path"] = args.report
    if args.samples:
        overrides["samples_path"] = args.samples
    if args.timing:
        overrides["timing_path"] = args.timing
    if overrides:
        import dataclasses

        cfg = dataclasses.replace(cfg, **overrides)
    result = run_pipeline(cfg, workers=args.workers)
    if not cfg.report_path:
        sys.stdout.write(canonical_dumps(result.report))
    return 0


def _flatten(prefix: str, value, row: dict) -> None:
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, row)
    elif isinstance(value, list):
        row[prefix] = ";".join(str(v) for v in value)
    else:
        row[prefix] = value


def cmd_report(args) -> int:
    samples = SampleSet.from_dict(load_path(args.samples))
    agg = samples.aggregate()
    summary = {
        "total_reads": samples.total_reads,
        "distinct_assignments": len(agg),
        "best_energy": agg.energies[0] if len(agg) else None,
        "mean_energy": (
            float(np.average(samples.energies, weights=samples.counts))
            if len(samples) else None),
        "provenance": samples.provenance,
    }
    if args.oracle_energy is not None:
        summary["success_probability"] = samples.success_fraction(args.oracle_energy)
    if args.format == "json":
        _emit(summary, args.out)
    else:
        row: dict = {}
        _flatten("", summary, row)
        keys = sorted(row)
        text = ",".join(keys) + "\n" + ",".join(str(row[k]) for k in keys) + "\n"
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinforge",
        description="Compile combinatorial problems to QUBO/Ising form, embed "
                    "them on Chimera graphs, and solve with annealing samplers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a parametrized problem instance")
    p.add_argument("--kind", required=True)
    p.add_argument("--params", help="JSON object of generator parameters")
    p.add_argument("--params-file", help="JSON file of generator parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("map", help="compile an instance to a QUBO model")
    p.add_argument("--instance", required=True)
    p.add_argument("--out-model", dest="out_model")
    p.add_argument("--out-varmap", dest="out_varmap")
    p.add_argument("--penalty-weight", dest="penalty_weight", type=float)
    p.set_defaults(func=cmd_map, out=None)

    p = sub.add_parser("embed", help="minor-embed a model onto a Chimera graph")
    p.add_argument("--model", required=True)
    p.add_argument("--domain", choices=["qubo", "ising"], default="qubo")
    p.add_argument("--chimera-n", dest="chimera_n", type=int, default=4)
    p.add_argument("--broken", help="comma-separated ids or a JSON file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=32)
    p.add_argument("--out")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("solve", help="run an engine on a model file")
    p.add_argument("--model", required=True)
    p.add_argument("--domain", choices=["qubo", "ising"], default="ising")
    p.add_argument("--engine", choices=["sa", "sqa", "boltzmann"], default="sa")
    p.add_argument("--params", help="JSON object of engine parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pipeline", help="run the full map/embed/solve pipeline")
    p.add_argument("--config", required=True)
    p.add_argument("--report")
    p.add_argument("--samples")
    p.add_argument("--timing")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("report", help="summarize a samples file")
    p.add_argument("--samples", required=True)
    p.add_argument("--oracle-energy", dest="oracle_energy", type=float)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpinforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
