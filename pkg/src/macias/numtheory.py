"""Exact elementary number theory: gcd, factorization, radicals, primality,
prime streams, multiplicative orders, and primes in arithmetic progressions.

Everything here is deterministic and exact; no probabilistic shortcuts.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

# Factorization bound: trial division up to sqrt(n) stays fast below this.
FACTORIZE_LIMIT = 10**12

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10**24 (covers
# the full n < 2**64 contract with margin).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, m) = m, but gcd(0, 0) is rejected."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative arguments")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as ascending (prime, exponent) pairs.

    factorize(1) is the empty list.  Bounded at FACTORIZE_LIMIT so callers
    get a clear error instead of an open-ended trial-division stall.
    """
    if n <= 0:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n > FACTORIZE_LIMIT:
        raise ValueError(f"factorize: {n} is too large (limit {FACTORIZE_LIMIT})")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    d = 5
    while d * d <= m:
        # 6k +/- 1 wheel
        for q in (d, d + 2):
            if m % q == 0:
                e = 0
                while m % q == 0:
                    m //= q
                    e += 1
                factors.append((q, e))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return factors


@lru_cache(maxsize=None)
def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def _miller_rabin_round(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for the n < 2**64 contract)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    return all(_miller_rabin_round(n, a) for a in _MR_BASES)


def primes_from(start: int = 2) -> Iterator[int]:
    """Yield every prime >= start, ascending (start itself included)."""
    n = max(start, 2)
    if n == 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def multiplicative_order(a: int, p: int) -> int:
    """Least T >= 1 with a**T == 1 (mod p), for prime p not dividing a."""
    if a < 1:
        raise ValueError(f"multiplicative_order requires a >= 1, got {a}")
    if not is_prime(p):
        raise ValueError(f"multiplicative_order requires a prime modulus, got {p}")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}; order is undefined")
    # Start from p-1 and strip prime factors while the power stays 1.
    order = p - 1
    for q, _ in factorize(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def primes_in_progression(step: int, offset: int, limit: int) -> list[int]:
    """All primes p <= limit with p == offset (mod step), ascending.

    The progression carries infinitely many primes only when
    gcd(step, offset) = 1; enumeration itself needs no such hypothesis.
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if offset < 0 or limit < 0:
        raise ValueError("offset and limit must be nonnegative")
    out = []
    c = offset % step
    while c <= limit:
        if c >= 2 and is_prime(c):
            out.append(c)
        c += step
    return out
