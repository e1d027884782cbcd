"""Exhaustive oracle: exact minima, ground-state sets, and backend parity."""

import numpy as np
import pytest

import spinforge._kernels_py as pure_kernels
from spinforge.backend import BACKEND
from spinforge.core import IsingModel, QuboModel, adjacency_csr, all_energies, brute_force
from spinforge.errors import CapacityError, InputError

from conftest import every_bits, every_spins, ising_value, qubo_value, random_ising_coeffs


class TestBruteForce:
    def test_single_spin(self):
        gs = brute_force(IsingModel([1.0]))
        assert gs.min_energy == -1.0
        assert gs.states.tolist() == [[-1]]

    def test_ferromagnetic_chain(self):
        # 8 spins, J = -1 between neighbors: aligned states at energy -7
        J = {(i, i + 1): -1.0 for i in range(7)}
        gs = brute_force(IsingModel(np.zeros(8), J))
        assert gs.min_energy == -7.0
        assert gs.count == 2
        assert gs.states[0].tolist() == [-1] * 8
        assert gs.states[1].tolist() == [1] * 8

    def test_matches_independent_enumeration(self, rng):
        n = 7
        linear, quadratic, offset = random_ising_coeffs(rng, n, density=0.6)
        m = IsingModel(linear, quadratic, offset)
        energies = [ising_value(linear, quadratic, offset, s) for s in every_spins(n)]
        gs = brute_force(m)
        assert gs.min_energy == pytest.approx(min(energies), abs=1e-12)

    def test_qubo_domain(self, rng):
        linear, quadratic, offset = random_ising_coeffs(rng, 5)
        q = QuboModel(linear, quadratic, offset)
        best = min(qubo_value(linear, quadratic, offset, b) for b in every_bits(5))
        gs = brute_force(q)
        assert gs.domain == "binary"
        assert gs.min_energy == pytest.approx(best, abs=1e-12)
        assert np.isin(gs.states, (0, 1)).all()

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            brute_force(IsingModel(np.zeros(25)))

    def test_cap_configurable(self):
        with pytest.raises(CapacityError):
            brute_force(IsingModel(np.zeros(10)), cap=8)

    def test_ground_list_sorted_by_assignment_index(self):
        # all-zero couplings with zero field: every state is a ground state
        gs = brute_force(IsingModel(np.zeros(3), {(0, 1): 0.0}))
        assert gs.count == 8
        first = gs.states[0]
        assert first.tolist() == [-1, -1, -1]


class TestAllEnergies:
    def test_matches_independent(self, rng):
        n = 6
        linear, quadratic, offset = random_ising_coeffs(rng, n)
        m = IsingModel(linear, quadratic, offset)
        spectrum = all_energies(m)
        for idx, spins in enumerate(
            tuple(2 * ((idx >> k) & 1) - 1 for k in range(n)) for idx in range(2 ** n)
        ):
            assert spectrum[idx] == pytest.approx(
                ising_value(linear, quadratic, offset, spins), abs=1e-12)

    def test_cap(self):
        with pytest.raises(CapacityError):
            all_energies(IsingModel(np.zeros(21)))


@pytest.mark.skipif(BACKEND != "compiled", reason="compiled backend unavailable")
class TestBackendAgreement:
    def test_scan_candidates_agree_on_ground_set(self, rng):
        from spinforge import _kernels as compiled_kernels

        for trial in range(10):
            local = np.random.default_rng(800 + trial)
            linear, quadratic, offset = random_ising_coeffs(local, 9, density=0.5)
            m = IsingModel(linear, quadratic, offset)
            indptr, indices, data = adjacency_csr(m)
            guard = 2e-9
            _, cand_c = compiled_kernels.bruteforce_scan(m.linear, indptr, indices, data, 9, guard)
            _, cand_p = pure_kernels.bruteforce_scan(m.linear, indptr, indices, data, 9, guard)
            # both are supersets of the ground set; exact re-evaluation must agree
            def ground(cand):
                bits = ((cand.astype(np.uint64)[:, None] >> np.arange(9, dtype=np.uint64)) & np.uint64(1))
                spins = (2 * bits.astype(np.int8) - 1).astype(np.int8)
                e = m.evaluate_batch(spins)
                lo = e.min()
                return set(cand[e <= lo + 1e-9].tolist()), lo

            set_c, lo_c = ground(cand_c)
            set_p, lo_p = ground(cand_p)
            assert set_c == set_p
            assert lo_c == lo_p
