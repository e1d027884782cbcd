"""Benchmark statistics, gauge averaging, generators, and makespan search."""

import math

import numpy as np
import pytest

from spinforge.bench import (
    EngineSpec,
    gauge_average,
    generate_instance,
    load_instance,
    makespan_binary_search,
)
from spinforge.core import IsingModel, brute_force
from spinforge.bench.stats import reads_to_solution, tts
from spinforge.errors import InputError, SolverError
from spinforge.jsonio import canonical_dumps
from spinforge.mappers import SchedulingInstance


class TestTts:
    def test_certain_success(self):
        assert tts(1.0, 0.25) == 0.25

    def test_zero_success(self):
        assert tts(0.0, 0.25) == math.inf

    def test_half(self):
        expected = math.log(0.01) / math.log(0.5)
        assert tts(0.5, 1.0) == pytest.approx(expected)
        assert tts(0.5, 1.0) == pytest.approx(6.6438, abs=1e-3)

    def test_range_check(self):
        with pytest.raises(InputError):
            tts(1.5, 1.0)

    def test_reads_to_solution(self):
        assert reads_to_solution(1.0) == 1.0
        assert reads_to_solution(0.0) == math.inf


class TestGaugeAverage:
    def _model(self):
        rng = np.random.default_rng(61)
        h = rng.uniform(-1, 1, 6)
        J = {(i, j): float(rng.uniform(-1, 1)) for i in range(6) for j in range(i + 1, 6)}
        return IsingModel(h, J)

    def test_single_gauge_equals_direct_run(self):
        m = self._model()
        spec = EngineSpec("sa", {"num_reads": 12, "sweeps": 60, "seed": 5})
        direct = spec.run(m)
        averaged = gauge_average(m, spec, num_gauges=1, seed=99)
        assert np.array_equal(direct.assignments, averaged.assignments)
        assert np.array_equal(direct.energies, averaged.energies)

    def test_merged_read_count(self):
        m = self._model()
        spec = EngineSpec("sa", {"num_reads": 10, "sweeps": 40, "seed": 1})
        out = gauge_average(m, spec, num_gauges=4, seed=2)
        assert out.total_reads == 40
        assert out.origins is not None
        gauges = sorted(set(out.origins[:, 0].tolist()))
        assert gauges == [0, 1, 2, 3]

    def test_energies_are_original_frame(self):
        m = self._model()
        spec = EngineSpec("sa", {"num_reads": 8, "sweeps": 50, "seed": 3})
        out = gauge_average(m, spec, num_gauges=3, seed=4)
        out.validate_energies(m, tol=1e-9)

    def test_per_gauge_success_within_binomial_bands(self):
        m = self._model()
        gs = brute_force(m)
        spec = EngineSpec("sa", {"num_reads": 200, "sweeps": 300, "seed": 7})
        out = gauge_average(m, spec, num_gauges=4, seed=8)
        rates = []
        for g in range(4):
            mask = out.origins[:, 0] == g
            hits = out.counts[mask & (out.energies <= gs.min_energy + 1e-9)].sum()
            rates.append(hits / 200)
        pooled = float(np.mean(rates))
        half_width = 1.96 * math.sqrt(max(pooled * (1 - pooled), 1e-9) / 200)
        for rate in rates:
            assert abs(rate - pooled) <= 2 * half_width + 1e-9

    def test_gauge_count_validated(self):
        with pytest.raises(InputError):
            gauge_average(self._model(), EngineSpec("sa", {}), num_gauges=0)


class TestGenerators:
    def test_eps_quaternary_tree_counts(self):
        inst = generate_instance("eps", {"branching": 4, "depth": 2}, seed=0)
        assert len(inst["parents"]) == 21
        assert len(inst["sensor_attach"]) == 16

    def test_deterministic_given_seed(self):
        a = generate_instance("random-ising", {"num_spins": 16}, seed=5)
        b = generate_instance("random-ising", {"num_spins": 16}, seed=5)
        assert canonical_dumps(a) == canonical_dumps(b)
        c = generate_instance("random-ising", {"num_spins": 16}, seed=6)
        assert canonical_dumps(a) != canonical_dumps(c)

    def test_coloring_k3_maps_to_nine_bits(self):
        from spinforge.mappers import map_coloring

        inst = generate_instance("coloring", {"num_vertices": 3, "num_colors": 3}, seed=0)
        kind, obj = load_instance(inst)
        assert kind == "coloring"
        qubo, _ = map_coloring(obj)
        assert qubo.num_vars == 9

    def test_chimera_native_couplings_on_hardware_edges(self):
        from spinforge.embed import chimera

        inst = generate_instance("chimera-native-ising", {"n": 2}, seed=3)
        kind, model = load_instance(inst)
        hw = chimera(2)
        dense = {node: idx for idx, node in enumerate(hw.nodes)}
        hardware_pairs = {(min(dense[u], dense[v]), max(dense[u], dense[v]))
                          for u, v in hw.edges()}
        assert set(model.quadratic) <= hardware_pairs
        assert len(model.quadratic) == hw.num_edges

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            generate_instance("sudoku", {}, seed=0)

    def test_planted_eps_readouts(self):
        inst = generate_instance(
            "eps", {"parents": [-1, 0, 0], "sensor_attach": [1, 2], "cb_faults": [0]},
            seed=0)
        assert inst["readouts"] == [0, 0]


class TestMakespan:
    ENGINE = EngineSpec("sa", {"num_reads": 30, "sweeps": 400})

    def test_two_jobs_one_machine(self):
        inst = SchedulingInstance(2, 1, 1)
        assert makespan_binary_search(inst, self.ENGINE, t_max=4, seed=1) == 2

    def test_single_job(self):
        inst = SchedulingInstance(1, 1, 1)
        assert makespan_binary_search(inst, self.ENGINE, t_max=3, seed=1) == 1

    def test_parallel_machines(self):
        inst = SchedulingInstance(3, 3, 1)
        assert makespan_binary_search(inst, self.ENGINE, t_max=3, seed=1) == 1

    def test_precedence_chain(self):
        inst = SchedulingInstance(3, 3, 1, precedences=((0, 1), (1, 2)))
        assert makespan_binary_search(inst, self.ENGINE, t_max=4, seed=1) == 3

    def test_infeasible_cap_fails(self):
        inst = SchedulingInstance(3, 1, 1)
        with pytest.raises(SolverError):
            makespan_binary_search(inst, self.ENGINE, t_max=2, seed=1)
