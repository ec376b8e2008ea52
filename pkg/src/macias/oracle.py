"""Definitional brute-force checkers for the derived decision procedures.

Everything here goes straight back to the definitions: a set is open when
each of its points has a basic neighborhood inside it, dense when it meets
every basic open, and a point is in a closure when every basic neighborhood
reaches the closed point.  None of the shortcut criteria from the topology
module are consulted (basic opens are rebuilt from raw gcd conditions), so
agreement between the two is evidence rather than tautology.  These
checkers are deliberately slow; their job is to be right at desk scale.
"""
from __future__ import annotations

import math
import random
from functools import lru_cache
from typing import Iterable, Iterator

from .functions import Polynomial, poly_preimage_sigma
from .numtheory import radical
from .residues import ResidueSet, make
from .topology import is_dense, is_open


@lru_cache(maxsize=None)
def _projection(rad_k: int, modulus: int) -> frozenset[int]:
    # Exact image of the basic open sigma(k) in the residue classes mod
    # `modulus`, computed at the joint modulus lcm(rad(k), modulus) from the
    # raw coprimality condition.  Every class counted here contains naturals
    # >= 1, so the projection loses nothing.
    joint = math.lcm(rad_k, modulus)
    return frozenset(c % modulus for c in range(joint) if math.gcd(c, rad_k) == 1)


def brute_is_open(s: ResidueSet, point_limit: int, k_limit: int,
                  containment_window: int = 1000) -> tuple[bool, int | None]:
    """Definitional openness check: every point needs a basic open inside S.

    For each member x <= point_limit, search k <= k_limit for a basic open
    sigma(k) containing x with sigma(k) a subset of S; the containment is
    decided exactly through residue projections at the joint modulus (the
    window argument only bounds diagnostic enumeration, never the
    decision).  Returns (False, x) for the first uncovered point.  "Not
    open" answers are always sound; "open" is exact once point_limit covers
    a full period and k_limit reaches the radical of the modulus.
    """
    if point_limit < 1 or k_limit < 1 or containment_window < 1:
        raise ValueError("limits must be >= 1")
    for x in s.enumerate(1, point_limit):
        covered = False
        for k in range(1, k_limit + 1):
            if math.gcd(k, x) != 1:
                continue
            if _projection(radical(k), s.modulus) <= s.residues:
                covered = True
                break
        if not covered:
            return False, x
    return True, None


def brute_is_dense(s: ResidueSet, k_limit: int) -> bool:
    """Definitional density check: S meets sigma(k) for every k <= k_limit.

    Exact once k_limit reaches the radical of the modulus of S.
    """
    if k_limit < 1:
        raise ValueError("k_limit must be >= 1")
    for k in range(1, k_limit + 1):
        if not _projection(radical(k), s.modulus) & s.residues:
            return False
    return True


def brute_closure_singleton(n: int, point_limit: int, k_limit: int) -> list[int]:
    """Definitional closure membership scan, straight from gcd conditions.

    x belongs to the closure of {n} when every basic open around x, i.e.
    every sigma(k) with gcd(k, x) = 1 and k <= k_limit, also contains n.
    """
    if n < 1:
        raise ValueError(f"closure point must be >= 1, got {n}")
    if point_limit < 1 or k_limit < 1:
        raise ValueError("limits must be >= 1")
    out = []
    for x in range(1, point_limit + 1):
        if all(math.gcd(k, n) == 1
               for k in range(1, k_limit + 1) if math.gcd(k, x) == 1):
            out.append(x)
    return out


def brute_preimage_check(f: Polynomial, n: int, window: int) -> bool:
    """Compare the computed polynomial preimage with direct gcd membership."""
    if window < 1:
        raise ValueError("window must be >= 1")
    pre = poly_preimage_sigma(f, n)
    return all(
        pre.contains(x) == (math.gcd(f.eval(x), n) == 1)
        for x in range(1, window + 1)
    )


def exhaustive_residue_sets(max_modulus: int) -> Iterator[ResidueSet]:
    """Every residue subset at every modulus up to max_modulus (canonicalized)."""
    for m in range(1, max_modulus + 1):
        for mask in range(1 << m):
            yield make(m, (r for r in range(m) if mask >> r & 1))


def random_residue_sets(count: int, max_modulus: int, seed: int) -> list[ResidueSet]:
    """Seeded random corpus of residue sets with moduli up to max_modulus."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_modulus)
        out.append(make(m, (r for r in range(m) if rng.random() < 0.5)))
    return out


def openness_density_agreement(sets: Iterable[ResidueSet],
                               extra_k: int = 0) -> tuple[int, list[str]]:
    """Run both derived criteria against brute force over a corpus.

    Per set the brute-force limits are one full period of points and every
    k up to the radical of the modulus (plus extra_k), which is the
    documented exactness boundary.  Returns (cases, disagreement notes).
    """
    disagreements = []
    cases = 0
    for s in sets:
        cases += 1
        k_limit = radical(s.modulus) + extra_k
        fast_open, _ = is_open(s)
        slow_open, uncovered = brute_is_open(s, s.modulus, k_limit)
        if fast_open != slow_open:
            disagreements.append(
                f"openness mismatch on {s}: criterion={fast_open} "
                f"brute={slow_open} (uncovered point {uncovered})")
        fast_dense = is_dense(s)
        slow_dense = brute_is_dense(s, k_limit)
        if fast_dense != slow_dense:
            disagreements.append(
                f"density mismatch on {s}: criterion={fast_dense} brute={slow_dense}")
    return cases, disagreements
