"""Binary <-> spin conversions: algebraic identities and exhaustive checks."""

import numpy as np
import pytest

from spinforge.core import (
    IsingModel,
    PolyObjective,
    QuboModel,
    ising_to_qubo,
    poly_to_qubo,
    qubo_to_ising,
)
from spinforge.errors import InputError

from conftest import every_bits, ising_value, qubo_value, random_qubo_coeffs


class TestQuboToIsing:
    def test_single_linear_term(self):
        # C(x) = x0 becomes h0 = 1/2 with offset 1/2
        m = qubo_to_ising(QuboModel([1.0]))
        assert m.linear[0] == 0.5
        assert m.offset == 0.5
        assert m.quadratic == {}

    def test_single_product_term(self):
        # C(x) = x0 x1 = (s0+1)(s1+1)/4
        m = qubo_to_ising(QuboModel([0.0, 0.0], {(0, 1): 1.0}))
        assert m.quadratic == {(0, 1): 0.25}
        assert m.linear.tolist() == [0.25, 0.25]
        assert m.offset == 0.25

    def test_exhaustive_energy_agreement(self, rng):
        n = 10
        linear, quadratic, offset = random_qubo_coeffs(rng, n)
        q = QuboModel(linear, quadratic, offset)
        m = qubo_to_ising(q)
        for bits in every_bits(n):
            spins = tuple(2 * b - 1 for b in bits)
            expected = qubo_value(linear, quadratic, offset, bits)
            assert q.evaluate(bits) == pytest.approx(expected, abs=1e-12)
            assert m.evaluate(spins) == pytest.approx(expected, abs=1e-12)


class TestIsingToQubo:
    def test_single_bias(self):
        q = ising_to_qubo(IsingModel([0.5], offset=0.5))
        assert q.linear[0] == 1.0
        assert q.offset == 0.0

    def test_single_coupling(self):
        # s0 s1 = 4 x0 x1 - 2 x0 - 2 x1 + 1
        q = ising_to_qubo(IsingModel([0.0, 0.0], {(0, 1): 1.0}))
        assert q.quadratic == {(0, 1): 4.0}
        assert q.linear.tolist() == [-2.0, -2.0]
        assert q.offset == 1.0

    def test_roundtrip_coefficients(self, rng):
        linear, quadratic, offset = random_qubo_coeffs(rng, 12, density=0.5)
        m = IsingModel(linear, quadratic, offset)
        back = qubo_to_ising(ising_to_qubo(m))
        assert np.allclose(back.linear, m.linear, atol=1e-12)
        assert back.quadratic.keys() == m.quadratic.keys()
        for key, value in m.quadratic.items():
            assert back.quadratic[key] == pytest.approx(value, abs=1e-12)
        assert back.offset == pytest.approx(m.offset, abs=1e-12)

    def test_qubo_roundtrip(self, rng):
        linear, quadratic, offset = random_qubo_coeffs(rng, 8, density=0.7)
        q = QuboModel(linear, quadratic, offset)
        back = ising_to_qubo(qubo_to_ising(q))
        assert np.allclose(back.linear, q.linear, atol=1e-12)
        for key, value in q.quadratic.items():
            assert back.quadratic[key] == pytest.approx(value, abs=1e-12)
        assert back.offset == pytest.approx(q.offset, abs=1e-12)


class TestPolyToQubo:
    def test_quadratic_cast(self):
        p = PolyObjective(2, {(): 1.5, (0,): 2.0, (0, 1): -1.0})
        q = poly_to_qubo(p)
        assert q.offset == 1.5
        assert q.linear.tolist() == [2.0, 0.0]
        assert q.quadratic == {(0, 1): -1.0}

    def test_cubic_rejected(self):
        p = PolyObjective(3, {(0, 1, 2): 1.0})
        with pytest.raises(InputError):
            poly_to_qubo(p)
