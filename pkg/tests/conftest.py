"""Shared independent oracles for the test suite.

These deliberately avoid the library's own evaluation paths: partial sums by
raw nested enumeration, star-sums by raw tuple enumeration, cycle-index
polynomials through the exponential generating function, so each identity is
checked by two genuinely different computations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

import pytest


def rising_int(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x + i
    return out


def brute_rho_partial(parts: tuple[int, ...], n_max: int) -> Fraction:
    """Nested-series partial sum by explicit tuple enumeration."""
    alpha = [p - 1 for p in parts]
    offsets = []
    acc = 0
    for a in alpha:
        offsets.append(acc)
        acc += a
    total = Fraction(0)
    r = len(parts)
    for combo in itertools.combinations(range(1, n_max + 1), r):
        denom = 1
        for j in range(r):
            denom *= rising_int(combo[j] + offsets[j], alpha[j] + 1)
        total += Fraction(1, denom)
    return total


def brute_mzv_star(n: int, m: int, shift=Fraction(0)) -> Fraction:
    """Star-sum by explicit enumeration of weakly increasing tuples."""
    shift = Fraction(shift)
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(range(1, n + 1), m):
        term = Fraction(1)
        for k in combo:
            term /= k + shift
        total += term
    return total


def bell_via_exp_series(m: int, values) -> Fraction:
    """P_m as the z^m coefficient of exp(sum_k values[k-1] z^k / k),
    via truncated power-series exponentiation."""
    # series of the exponent, degree <= m
    expo = [Fraction(0)] * (m + 1)
    for k in range(1, m + 1):
        expo[k] = Fraction(values[k - 1], k)
    # exp via term-by-term products of expo^j / j!
    result = [Fraction(0)] * (m + 1)
    result[0] = Fraction(1)
    power = [Fraction(1)] + [Fraction(0)] * m
    for j in range(1, m + 1):
        nxt = [Fraction(0)] * (m + 1)
        for i, pi in enumerate(power):
            if not pi:
                continue
            for k in range(1, m + 1 - i):
                nxt[i + k] += pi * expo[k]
        power = nxt
        fj = factorial(j)
        for i in range(m + 1):
            result[i] += power[i] / fj
    return result[m]


@pytest.fixture
def frozen_pi_digits():
    # 50 digits, for independent closed-form zeta checks
    return "3.14159265358979323846264338327950288419716939937510"
