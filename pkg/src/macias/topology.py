"""Decision procedures for the Macias topology on the naturals.

The topology is generated by the coprimality sets sigma(n) = { m : gcd(n, m) = 1 },
which are closed under intersection and therefore form a basis.  Openness
and density of arbitrary periodic sets reduce to finite residue checks;
both criteria are validated against definitional brute force in the test
suite (see the oracle module) before anything else relies on them.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .numtheory import factorize, is_prime, primes_from, radical
from .residues import ResidueSet, make


@lru_cache(maxsize=None)
def sigma(n: int) -> ResidueSet:
    """Basic open sigma(n): the naturals coprime to n.

    Membership depends only on the residue mod radical(n), so the canonical
    modulus is the radical; sigma(1) is the full set.
    """
    if n < 1:
        raise ValueError(f"sigma requires n >= 1, got {n}")
    rad = radical(n)
    coprime = bytearray([1]) * rad
    for p, _ in factorize(rad):
        coprime[::p] = bytes(len(range(0, rad, p)))
    return make(rad, (r for r in range(rad) if coprime[r]))


def _prime_block(modulus: int, keep_primes: list[int]) -> frozenset[int]:
    # Residues mod `modulus` avoiding every prime in keep_primes: the image
    # of the basic open generated by their product.
    block = bytearray([1]) * modulus
    for p in keep_primes:
        block[::p] = bytes(len(range(0, modulus, p)))
    return frozenset(r for r in range(modulus) if block[r])


def is_open(s: ResidueSet) -> tuple[bool, int | None]:
    """Decide openness in the Macias topology; on failure report a witness.

    A canonical set S with modulus m is open iff for every residue r in S
    the whole block { s in [0, m) : gcd(s, d_r) = 1 } lies inside S, where
    d_r is the product of the primes of m not dividing r.  sigma(d_r) is the
    largest basic open around the class r that the modulus can see, so the
    block test decides interior membership exactly.  Returns (True, None)
    or (False, first violating residue class).
    """
    m = s.modulus
    primes_of_m = [p for p, _ in factorize(m)]
    for r in sorted(s.residues):
        d_primes = [p for p in primes_of_m if r % p != 0]
        if not _prime_block(m, d_primes) <= s.residues:
            return False, r
    return True, None


def is_dense(s: ResidueSet) -> bool:
    """Decide density in the Macias topology.

    A nonempty canonical set is dense iff some allowed residue is coprime
    to the modulus: such a class meets every basic open by the Chinese
    Remainder construction, while otherwise sigma(radical(m)) is missed.
    """
    m = s.modulus
    return any(math.gcd(r, m) == 1 for r in s.residues)


def closure_singleton(n: int) -> ResidueSet:
    """Closure of the one-point set {n}: the multiples of radical(n)."""
    if n < 1:
        raise ValueError(f"closure_singleton requires n >= 1, got {n}")
    return make(radical(n), (0,))


def closure_finite(points) -> ResidueSet:
    """Closure of a finite point set (union of the singleton closures)."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("closure_finite requires at least one point")
    out = closure_singleton(pts[0])
    for p in pts[1:]:
        out = out.union(closure_singleton(p))
    return out


def closure_product_check(n: int, m: int) -> bool:
    """Check cl({n*m}) = cl({n}) intersect cl({m}); expected to hold for all n, m."""
    if n < 1 or m < 1:
        raise ValueError("closure_product_check requires n, m >= 1")
    return closure_singleton(n * m) == closure_singleton(n).intersect(
        closure_singleton(m))


def fresh_prime_in_sigma(primes) -> int:
    """Least prime outside the given list (hence inside sigma of its product)."""
    given = list(primes)
    if not given:
        raise ValueError("fresh_prime_in_sigma requires at least one prime")
    for p in given:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    exclude = set(given)
    for q in primes_from(2):
        if q not in exclude:
            return q
    raise AssertionError("unreachable")
