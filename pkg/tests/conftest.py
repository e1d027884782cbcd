"""Shared fixtures and independent oracles.

The helpers here deliberately avoid the package's evaluation/enumeration code
paths: tests that verify those paths need a second opinion computed with plain
Python arithmetic.
"""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest


def every_bits(n):
    """All 0/1 assignments of length n, lexicographic by tuple."""
    return product((0, 1), repeat=n)


def every_spins(n):
    return product((-1, 1), repeat=n)


def poly_value(terms, bits):
    """Direct PUBO evaluation from a {index-tuple: coeff} dict."""
    total = 0.0
    for key, coeff in terms.items():
        prod = coeff
        for i in key:
            prod *= bits[i]
        total += prod
    return total


def qubo_value(linear, quadratic, offset, bits):
    total = offset
    for i, a in enumerate(linear):
        total += a * bits[i]
    for (i, j), b in quadratic.items():
        total += b * bits[i] * bits[j]
    return total


def ising_value(h, J, offset, spins):
    total = offset
    for i, hi in enumerate(h):
        total += hi * spins[i]
    for (i, j), coupling in J.items():
        total += coupling * spins[i] * spins[j]
    return total


def random_qubo_coeffs(rng, n, density=1.0):
    linear = rng.uniform(-1, 1, size=n)
    quadratic = {}
    for i in range(n):
        for j in range(i + 1, n):
            if density >= 1.0 or rng.random() < density:
                quadratic[(i, j)] = float(rng.uniform(-1, 1))
    return linear, quadratic, float(rng.uniform(-1, 1))


def random_ising_coeffs(rng, n, density=1.0):
    return random_qubo_coeffs(rng, n, density)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
