"""Model construction, evaluation, and JSON round-trips."""

import json

import numpy as np
import pytest

from spinforge.core import IsingModel, QuboModel, adjacency_csr
from spinforge.errors import InputError
from spinforge.jsonio import canonical_dumps

from conftest import every_bits, qubo_value, random_qubo_coeffs


class TestEvaluate:
    def test_zero_assignment(self):
        q = QuboModel([1.0])
        assert q.evaluate([0]) == 0.0

    def test_cancelling_terms(self):
        q = QuboModel([1.0, 1.0], {(0, 1): -2.0})
        assert q.evaluate([1, 1]) == 0.0

    def test_single_spin_bias(self):
        m = IsingModel([1.0])
        assert m.evaluate([-1]) == -1.0

    def test_offset_included(self):
        q = QuboModel([2.0], offset=3.5)
        assert q.evaluate([1]) == 5.5

    def test_length_mismatch(self):
        q = QuboModel([1.0, 1.0])
        with pytest.raises(InputError):
            q.evaluate([1])

    def test_domain_violation(self):
        q = QuboModel([1.0])
        with pytest.raises(InputError):
            q.evaluate([-1])
        m = IsingModel([1.0])
        with pytest.raises(InputError):
            m.evaluate([0])

    def test_batch_matches_single(self, rng):
        linear, quadratic, offset = random_qubo_coeffs(rng, 6)
        q = QuboModel(linear, quadratic, offset)
        bits = np.array(list(every_bits(6)), dtype=np.int8)
        batch = q.evaluate_batch(bits)
        for row, energy in zip(bits, batch):
            assert q.evaluate(row) == pytest.approx(energy, abs=1e-12)


class TestValidation:
    def test_self_loop_rejected(self):
        with pytest.raises(InputError):
            QuboModel([0.0, 0.0], {(1, 1): 1.0})

    def test_out_of_range_coupling(self):
        with pytest.raises(InputError):
            QuboModel([0.0], {(0, 1): 1.0})

    def test_non_finite(self):
        with pytest.raises(InputError):
            QuboModel([np.inf])
        with pytest.raises(InputError):
            IsingModel([0.0, 0.0], {(0, 1): np.nan})

    def test_key_normalized_and_zero_pruned(self):
        q = QuboModel([0.0, 0.0], {(1, 0): 2.0, (0, 1): -2.0})
        assert q.quadratic == {}

    def test_immutable(self):
        q = QuboModel([1.0])
        with pytest.raises(AttributeError):
            q.offset = 2.0


class TestJson:
    def test_schema_fields(self):
        q = QuboModel([1.0, -0.5], {(0, 1): 0.25}, offset=0.125)
        d = q.to_dict()
        assert set(d) == {"num_vars", "linear", "quadratic", "offset"}
        assert d["quadratic"] == [[0, 1, 0.25]]

    def test_bit_exact_roundtrip(self, rng):
        linear, quadratic, offset = random_qubo_coeffs(rng, 9)
        q = QuboModel(linear, quadratic, offset)
        text = canonical_dumps(q.to_dict())
        again = QuboModel.from_dict(json.loads(text))
        assert again == q
        assert canonical_dumps(again.to_dict()) == text

    def test_ising_roundtrip(self, rng):
        linear, quadratic, offset = random_qubo_coeffs(rng, 7, density=0.4)
        m = IsingModel(linear, quadratic, offset)
        assert IsingModel.from_dict(json.loads(canonical_dumps(m.to_dict()))) == m

    def test_seventeen_digit_float_survives(self):
        value = 0.1234567890123456789
        q = QuboModel([value])
        assert QuboModel.from_dict(json.loads(canonical_dumps(q.to_dict()))).linear[0] == q.linear[0]


def test_adjacency_csr_symmetric(rng):
    linear, quadratic, offset = random_qubo_coeffs(rng, 8, density=0.5)
    m = IsingModel(linear, quadratic, offset)
    indptr, indices, data = adjacency_csr(m)
    assert indptr[-1] == 2 * len(quadratic)
    rebuilt = {}
    for i in range(8):
        for p in range(indptr[i], indptr[i + 1]):
            j = int(indices[p])
            assert j != i
            rebuilt[(min(i, j), max(i, j))] = float(data[p])
    assert rebuilt == m.quadratic
