"""Number-theoretic facts the classification arguments lean on.

Everything here is exact: 2-adic valuations by the floor-sum formula,
central binomial residues by carry counting (with the direct big-integer
product available as an independent path), prime counts by sieve.
"""

from __future__ import annotations

import math
from typing import Optional


def factorial_two_adic(n: int) -> int:
    """v_2(n!) as the sum of floor(n / 2^i) over i >= 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    power = 2
    while power <= n:
        total += n // power
        power *= 2
    return total


def central_binomial_two_adic(z: int) -> int:
    """v_2(C(2z, z)); equals the number of ones in binary z (Kummer)."""
    if z < 0:
        raise ValueError("z must be nonnegative")
    # Carries when adding z + z in base 2 happen at every set bit.
    return bin(z).count("1")


def central_binomial_mod4(z: int) -> int:
    """C(2z, z) mod 4 via the carry count; the value is always 0 or 2.

    The residue is 2 exactly when v_2(C(2z,z)) = 1, i.e. when z is a
    power of two; otherwise the valuation is at least 2.
    """
    if z < 1:
        raise ValueError("z must be positive")
    return 2 if central_binomial_two_adic(z) == 1 else 0


def central_binomial_mod4_direct(z: int) -> int:
    """C(2z, z) mod 4 by full big-integer expansion (independent path)."""
    if z < 1:
        raise ValueError("z must be positive")
    return math.comb(2 * z, z) % 4


def central_binomial_solve(target: int, k_max: int = 20) -> Optional[int]:
    """Least k with 3 <= k <= k_max and C(2^k, 2^(k-1)) == target.

    Full expansion is only attempted while a cheap lower bound on the
    bit length of the central binomial does not already exceed the
    target (C(2h,h) >= 4^h / (2h+1)), so large k_max stays cheap.
    """
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    if target < 1:
        return None
    for k in range(3, k_max + 1):
        half = 1 << (k - 1)
        lower_bits = 2 * half - (2 * half + 1).bit_length()
        if lower_bits > target.bit_length():
            break
        if math.comb(2 * half, half) == target:
            return k
    return None


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def prime_pi(n: int) -> int:
    """The prime-counting function pi(n)."""
    return len(primes_up_to(n))


def prime_count_gap(k: int) -> int:
    """pi(2^k) - pi(2^(k-1))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    hi, lo = 1 << k, 1 << (k - 1)
    count = 0
    for p in primes_up_to(hi):
        if p > lo:
            count += 1
    return count


def prime_valuation_central_binomial(p: int, k: int) -> int:
    """v_p(C(2^k, 2^(k-1))) by the floor-sum (Legendre) formula."""
    n, h = 1 << k, 1 << (k - 1)
    total = 0
    power = p
    while power <= n:
        total += n // power - 2 * (h // power)
        power *= p
    return total


def no_prime_double_is_central_binomial(k_max: int) -> tuple[bool, dict[int, list[int]]]:
    """Check that C(2^k, 2^(k-1)) / 2 is composite for 3 <= k <= k_max.

    Every prime in the dyadic interval (2^(k-1), 2^k) divides the
    central binomial exactly once and there are at least two of them,
    so the halved value has two distinct odd prime factors.  Returns
    (ok, witnesses) where witnesses[k] lists the dividing primes found.
    """
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    witnesses: dict[int, list[int]] = {}
    ok = True
    for k in range(3, k_max + 1):
        lo, hi = 1 << (k - 1), 1 << k
        gap_primes = [p for p in primes_up_to(hi) if p > lo]
        dividing = [
            p for p in gap_primes if prime_valuation_central_binomial(p, k) >= 1
        ]
        witnesses[k] = dividing
        if len(dividing) < 2:
            ok = False
    return ok, witnesses
