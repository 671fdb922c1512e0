import math

import pytest
from hypothesis import given, settings, strategies as st

from hodgekit.numth import (
    central_binomial_mod4,
    central_binomial_mod4_direct,
    central_binomial_solve,
    central_binomial_two_adic,
    factorial_two_adic,
    no_prime_double_is_central_binomial,
    prime_count_gap,
    prime_pi,
    primes_up_to,
)


def test_factorial_two_adic_examples():
    assert factorial_two_adic(4) == 3
    assert factorial_two_adic(0) == 0
    assert factorial_two_adic(10) == 8


def test_factorial_two_adic_matches_popcount_identity():
    # Legendre: v2(n!) = n - s2(n)
    for n in range(0, 3000):
        assert factorial_two_adic(n) == n - bin(n).count("1")


def test_power_of_two_factorials():
    for k in range(3, 12):
        assert factorial_two_adic(1 << (k - 1)) == (1 << (k - 1)) - 1


def test_central_binomial_mod4_examples():
    assert central_binomial_mod4(4) == 2
    assert central_binomial_mod4(3) == 0
    assert central_binomial_mod4(1) == 2


def test_mod4_paths_agree():
    for z in range(1, 1025):
        assert central_binomial_mod4(z) == central_binomial_mod4_direct(z)


@given(st.integers(min_value=1, max_value=10000))
@settings(max_examples=200, deadline=None)
def test_kummer_valuation_identity(z):
    assert central_binomial_two_adic(z) == factorial_two_adic(2 * z) - 2 * factorial_two_adic(z)


def test_central_binomial_solve():
    assert central_binomial_solve(70) == 3
    assert central_binomial_solve(6) is None
    assert central_binomial_solve(12870) == 4
    assert central_binomial_solve(math.comb(32, 16)) == 5
    assert central_binomial_solve(math.comb(32, 16) + 2) is None
    with pytest.raises(ValueError):
        central_binomial_solve(70, k_max=2)


def test_central_binomial_solve_large_kmax_is_cheap():
    # the bit-length bound prunes before any huge expansion happens
    assert central_binomial_solve(70, k_max=200) == 3


def test_primes_and_pi():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_pi(1) == 0
    assert prime_pi(2) == 1
    assert prime_pi(100) == 25


def test_prime_count_gap_examples():
    assert prime_count_gap(1) == 1
    assert prime_count_gap(3) == 2  # 5, 7
    assert prime_count_gap(4) == 2  # 11, 13
    for k in range(3, 16):
        assert prime_count_gap(k) >= 2


def test_prime_count_gap_telescopes():
    total = sum(prime_count_gap(k) for k in range(1, 13))
    assert total == prime_pi(1 << 12)


def test_no_prime_double_small_cases():
    ok, witnesses = no_prime_double_is_central_binomial(4)
    assert ok
    assert witnesses[3] == [5, 7]
    assert witnesses[4] == [11, 13]
    # direct check: the witnesses really divide the binomials
    assert math.comb(8, 4) % 5 == 0 and math.comb(8, 4) % 7 == 0
    assert 6435 == math.comb(16, 8) // 2
    assert 6435 == 3 * 3 * 5 * 11 * 13


def test_no_prime_double_scan():
    ok, witnesses = no_prime_double_is_central_binomial(10)
    assert ok
    for k, primes in witnesses.items():
        assert len(primes) >= 2
        value = math.comb(1 << k, 1 << (k - 1))
        for p in primes:
            assert value % p == 0
