"""Canonical algebra of periodic subsets of the naturals.

A ResidueSet with modulus m and residue set R denotes
{ x >= 1 : x mod m in R }.  Every periodic subset of the naturals has a
unique minimal-modulus description, and `make` always produces it, so set
equality is plain structural equality.  The empty set is 1:{} and the full
set of naturals is 1:{0}.

Text format (CLI and fixtures): ``m:{r1,r2,...}`` with ascending residues,
e.g. ``7:{1,2,3,4,5}``; ``1:{0}`` is the naturals, ``1:{}`` the empty set.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .numtheory import factorize

# Public contracts keep moduli below 2**32; operations reject rather than
# grind on sets whose lcm blows past it.
MAX_MODULUS = 2**32


@dataclass(frozen=True)
class ResidueSet:
    """Periodic subset of the naturals, as a modulus plus allowed residues.

    Construct through `make` (which canonicalizes); the raw constructor
    only validates and is used for deliberately non-canonical views such
    as `lift`.
    """

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.modulus!r}")
        object.__setattr__(self, "residues", frozenset(self.residues))
        for r in self.residues:
            if not isinstance(r, int) or not 0 <= r < self.modulus:
                raise ValueError(f"residue {r!r} out of range [0, {self.modulus})")

    def contains(self, x: int) -> bool:
        """Membership of the natural number x (x >= 1)."""
        if x < 1:
            raise ValueError(f"domain starts at 1, got {x}")
        return x % self.modulus in self.residues

    def lift(self, new_modulus: int) -> "ResidueSet":
        """Same denoted set rewritten at a multiple of the modulus.

        The result is a non-canonical view; feed it back through `make`
        to canonicalize.
        """
        if new_modulus % self.modulus != 0:
            raise ValueError(
                f"{new_modulus} is not a multiple of modulus {self.modulus}")
        expanded = frozenset(
            r + k * self.modulus
            for r in self.residues
            for k in range(new_modulus // self.modulus)
        )
        return ResidueSet(new_modulus, expanded)

    def intersect(self, other: "ResidueSet") -> "ResidueSet":
        m = _joint_modulus(self, other)
        a, b = self, other
        if len(a.residues) * b.modulus > len(b.residues) * a.modulus:
            a, b = b, a  # iterate over the sparser side
        kept = {
            r
            for base in a.residues
            for r in range(base, m, a.modulus)
            if r % b.modulus in b.residues
        }
        return make(m, kept)

    def union(self, other: "ResidueSet") -> "ResidueSet":
        m = _joint_modulus(self, other)
        res = {
            r
            for s in (self, other)
            for base in s.residues
            for r in range(base, m, s.modulus)
        }
        return make(m, res)

    def complement(self) -> "ResidueSet":
        """Complement relative to the full set of naturals."""
        return make(self.modulus, set(range(self.modulus)) - self.residues)

    def is_empty(self) -> bool:
        return not self.residues

    def is_all(self) -> bool:
        return self.modulus == 1 and 0 in self.residues

    def enumerate(self, lo: int, hi: int) -> list[int]:
        """Ascending members in the window [lo, hi], 1 <= lo <= hi."""
        if not 1 <= lo <= hi:
            raise ValueError(f"window must satisfy 1 <= lo <= hi, got [{lo}, {hi}]")
        return [x for x in range(lo, hi + 1) if x % self.modulus in self.residues]

    def __str__(self) -> str:
        inner = ",".join(str(r) for r in sorted(self.residues))
        return f"{self.modulus}:{{{inner}}}"


def _joint_modulus(a: ResidueSet, b: ResidueSet) -> int:
    m = math.lcm(a.modulus, b.modulus)
    if m > MAX_MODULUS:
        raise ValueError(f"modulus too large: lcm({a.modulus}, {b.modulus}) = {m}")
    return m


def _minimal_period(modulus: int, residues: frozenset[int]) -> int:
    # The cyclic shifts fixing the residue set form a subgroup of Z_modulus,
    # so the minimal period divides the modulus and greedy prime-stripping
    # finds it.
    period = modulus
    for p, _ in factorize(modulus):
        while period % p == 0:
            candidate = period // p
            if all((r + candidate) % modulus in residues for r in residues):
                period = candidate
            else:
                break
    return period


def make(modulus: int, residues) -> ResidueSet:
    """Canonical ResidueSet for the periodic set with the given description."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if modulus > MAX_MODULUS:
        raise ValueError(f"modulus too large: {modulus} > {MAX_MODULUS}")
    residues = frozenset(residues)
    for r in residues:
        if not isinstance(r, int) or not 0 <= r < modulus:
            raise ValueError(f"residue {r!r} out of range [0, {modulus})")
    period = _minimal_period(modulus, residues)
    return ResidueSet(period, frozenset(r % period for r in residues))


EMPTY = make(1, ())
ALL = make(1, (0,))

_FORMAT_RE = re.compile(r"\s*(\d+)\s*:\s*\{([\d\s,]*)\}\s*$")


def parse(text: str) -> ResidueSet:
    """Parse the ``m:{r1,r2,...}`` text format (inverse of str())."""
    m = _FORMAT_RE.match(text)
    if m is None:
        raise ValueError(
            f"malformed residue set {text!r}: expected m:{{r1,r2,...}}")
    modulus = int(m.group(1))
    body = m.group(2).strip()
    residues = set()
    if body:
        for token in body.split(","):
            token = token.strip()
            if not token.isdigit():
                raise ValueError(
                    f"malformed residue {token!r} at position {text.find(token) if token else m.start(2)} in {text!r}")
            residues.add(int(token))
    return make(modulus, residues)
