"""Polynomials with natural coefficients and exponential maps a^x + b:
exact preimages of basic opens, continuity certification with witness
primes, and the comparison against the relatively-prime-integer (Golomb)
topology.

Text grammars (CLI and fixtures):
  polynomial   terms ``c``, ``x``, ``cx``, ``x^k``, ``cx^k`` joined by ``+``,
               e.g. ``x^2+4x+2``, ``5x^3``, ``7``
  exponential  ``a^x`` or ``a^x+b``, e.g. ``2^x+3``
Whitespace is insignificant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .numtheory import factorize, is_prime, multiplicative_order, primes_from, radical
from .residues import ALL, EMPTY, ResidueSet, make
from .topology import is_open

DEFAULT_PRIME_BOUND = 10_000


@dataclass(frozen=True)
class Polynomial:
    """f(x) = sum a_k x^k with natural coefficients, a_0 first.

    Trailing zero coefficients are trimmed on construction; the zero
    polynomial is rejected (it does not map the naturals into themselves).
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        for a in coeffs:
            if not isinstance(a, int) or a < 0:
                raise ValueError(f"coefficients must be naturals or 0, got {a!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            raise ValueError("the zero polynomial is excluded")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def eval(self, x: int) -> int:
        """Exact value at x >= 1 (Horner)."""
        if x < 1:
            raise ValueError(f"domain starts at 1, got {x}")
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    def eval_mod(self, x: int, m: int) -> int:
        """Value mod m via modular Horner; any x >= 0 is accepted here."""
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        acc = 0
        for a in reversed(self.coefficients):
            acc = (acc * x + a) % m
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def monomial(self) -> tuple[int, int] | None:
        """(a, n) when the polynomial is a single term a*x^n, else None."""
        nonzero = [(a, k) for k, a in enumerate(self.coefficients) if a != 0]
        if len(nonzero) == 1:
            a, k = nonzero[0]
            return a, k
        return None

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coefficients[k]
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                coeff = "" if a == 1 else str(a)
                power = "x" if k == 1 else f"x^{k}"
                terms.append(coeff + power)
        return "+".join(terms)


@dataclass(frozen=True)
class ExpFunction:
    """f(x) = base**x + shift with base >= 1 and shift >= 0."""

    base: int
    shift: int = 0

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 1:
            raise ValueError(f"base must be a natural >= 1, got {self.base!r}")
        if not isinstance(self.shift, int) or self.shift < 0:
            raise ValueError(f"shift must be >= 0, got {self.shift!r}")

    def eval(self, x: int) -> int:
        if x < 1:
            raise ValueError(f"domain starts at 1, got {x}")
        return self.base**x + self.shift

    def __str__(self) -> str:
        return f"{self.base}^x" + (f"+{self.shift}" if self.shift else "")


CONTINUOUS = "continuous"
DISCONTINUOUS = "discontinuous"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ContinuityVerdict:
    """Outcome of a continuity check.

    Discontinuous verdicts carry the least witness prime together with the
    offending preimage (which fails is_open) and its failing residue class.
    Inconclusive records how far the bounded witness search went.
    """

    status: str
    reason: str | None = None
    monomial: tuple[int, int] | None = None
    witness_prime: int | None = None
    preimage: ResidueSet | None = None
    failing_class: int | None = None
    primes_checked_up_to: int | None = None

    @classmethod
    def continuous(cls, reason: str, monomial: tuple[int, int] | None = None):
        return cls(CONTINUOUS, reason=reason, monomial=monomial)

    @classmethod
    def discontinuous(cls, p: int, preimage: ResidueSet, failing_class: int):
        return cls(DISCONTINUOUS, witness_prime=p, preimage=preimage,
                   failing_class=failing_class)

    @classmethod
    def inconclusive(cls, bound: int):
        return cls(INCONCLUSIVE, primes_checked_up_to=bound)


def poly_preimage_sigma(f: Polynomial, n: int) -> ResidueSet:
    """Exact preimage { x : gcd(f(x), n) = 1 } of the basic open sigma(n).

    gcd(f(x), n) = 1 is a condition prime-by-prime on the primes of n, and
    f(x) mod p depends only on x mod p, so the preimage is periodic with
    period radical(n).
    """
    if n < 1:
        raise ValueError(f"preimage requires n >= 1, got {n}")
    rad = radical(n)
    kept = (r for r in range(rad) if math.gcd(f.eval_mod(r, rad), rad) == 1)
    return make(rad, kept)


def exp_preimage_sigma(g: ExpFunction, p: int) -> ResidueSet:
    """Exact preimage { x >= 1 : gcd(a^x + b, p) = 1 } for prime p.

    When p divides the base the value is congruent to the shift for every
    x >= 1.  Otherwise a^x is periodic in x with period ord_p(a); class 0
    stands for x in {T, 2T, ...} and a^T == a^0 == 1 keeps the bookkeeping
    uniform.
    """
    if not is_prime(p):
        raise ValueError(f"exp_preimage_sigma requires a prime, got {p}")
    a, b = g.base, g.shift
    if a % p == 0:
        return ALL if b % p != 0 else EMPTY
    period = multiplicative_order(a, p)
    kept = (r for r in range(period) if (pow(a, r, p) + b) % p != 0)
    return make(period, kept)


def _fails_trichotomy(preimage: ResidueSet, p: int) -> bool:
    # For prime p the only open candidates at modulus p are the empty set,
    # sigma(p) itself, and the full set.
    if preimage.is_empty() or preimage.is_all():
        return False
    return preimage != make(p, range(1, p))


def poly_continuity(f: Polynomial,
                    prime_bound: int = DEFAULT_PRIME_BOUND) -> ContinuityVerdict:
    """Certify continuity of a polynomial or produce the least witness prime.

    Single-term polynomials are continuous outright.  Anything else is
    scanned over ascending primes: the first prime whose preimage escapes
    { empty, sigma(p), all } certifies discontinuity.  The bound keeps the
    search finite; hitting it yields an explicit inconclusive verdict.
    """
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")
    mono = f.monomial()
    if mono is not None:
        a, k = mono
        return ContinuityVerdict.continuous(_monomial_reason(a, k), monomial=mono)
    for p in primes_from(2):
        if p > prime_bound:
            break
        preimage = poly_preimage_sigma(f, p)
        if _fails_trichotomy(preimage, p):
            ok, failing = is_open(preimage)
            assert not ok
            return ContinuityVerdict.discontinuous(p, preimage, failing)
    return ContinuityVerdict.inconclusive(prime_bound)


def exp_continuity(g: ExpFunction,
                   prime_bound: int = DEFAULT_PRIME_BOUND) -> ContinuityVerdict:
    """Certify continuity of a^x + b or produce the least witness prime.

    Pure exponentials (b = 0) and base 1 (a constant map) are continuous;
    otherwise primes are scanned ascending and the first non-open preimage
    is the witness.  The bounded search is honest: exhausting it returns
    an inconclusive verdict rather than a guess.
    """
    if prime_bound < 2:
        raise ValueError(f"prime_bound must be >= 2, got {prime_bound}")
    if g.shift == 0:
        return ContinuityVerdict.continuous("pure-exponential")
    if g.base == 1:
        return ContinuityVerdict.continuous("constant")
    for p in primes_from(2):
        if p > prime_bound:
            break
        preimage = exp_preimage_sigma(g, p)
        ok, failing = is_open(preimage)
        if not ok:
            return ContinuityVerdict.discontinuous(p, preimage, failing)
    return ContinuityVerdict.inconclusive(prime_bound)


def _monomial_reason(a: int, k: int) -> str:
    if k == 0:
        return f"monomial({a},0)"
    return f"monomial({a},{k})"


def golomb_poly_is_continuous(f: Polynomial) -> bool:
    """Continuity in the relatively-prime-integer (Golomb) topology.

    Nonconstant polynomials are continuous there exactly when the constant
    term vanishes; constants are continuous since their preimages are the
    empty set or everything.
    """
    if f.degree == 0:
        return True
    return f.coefficients[0] == 0


def schur_prime_divisors(f: Polynomial, max_x: int) -> list[int]:
    """Ascending distinct primes dividing some value f(1), ..., f(max_x)."""
    if max_x < 1:
        raise ValueError(f"max_x must be >= 1, got {max_x}")
    primes: set[int] = set()
    for x in range(1, max_x + 1):
        for p, _ in factorize(f.eval(x)):
            primes.add(p)
    return sorted(primes)


class ParseError(ValueError):
    """Raised on malformed expression text; cites the offending token."""


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif c in ("x", "^", "+"):
            tokens.append((c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r} at position {i}")
    return tokens


def parse_polynomial(text: str) -> Polynomial:
    """Parse the polynomial grammar; repeated powers accumulate."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial expression")
    coeffs: dict[int, int] = {}
    pos = 0

    def parse_term():
        nonlocal pos
        coeff = 1
        has_coeff = False
        if pos < len(tokens) and tokens[pos][0] == "int":
            coeff = int(tokens[pos][1])
            has_coeff = True
            pos += 1
        power = 0
        if pos < len(tokens) and tokens[pos][0] == "x":
            power = 1
            pos += 1
            if pos < len(tokens) and tokens[pos][0] == "^":
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "int":
                    where = tokens[pos - 1][2]
                    raise ParseError(f"expected exponent after '^' at position {where}")
                power = int(tokens[pos][1])
                pos += 1
        elif not has_coeff:
            kind, tok, where = tokens[pos]
            raise ParseError(f"unexpected token {tok!r} at position {where}")
        coeffs[power] = coeffs.get(power, 0) + coeff

    parse_term()
    while pos < len(tokens):
        kind, tok, where = tokens[pos]
        if kind != "+":
            raise ParseError(f"unexpected token {tok!r} at position {where}")
        pos += 1
        if pos >= len(tokens):
            raise ParseError(f"dangling '+' at position {where}")
        parse_term()
    top = max(coeffs)
    return Polynomial(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def parse_exp_function(text: str) -> ExpFunction:
    """Parse ``a^x`` or ``a^x+b``."""
    tokens = _tokenize(text)
    shapes = [t[0] for t in tokens]
    if shapes == ["int", "^", "x"]:
        return ExpFunction(int(tokens[0][1]), 0)
    if shapes == ["int", "^", "x", "+", "int"]:
        return ExpFunction(int(tokens[0][1]), int(tokens[4][1]))
    if not tokens:
        raise ParseError("empty exponential expression")
    expected = ["int", "^", "x", "+", "int"]
    for i, t in enumerate(tokens):
        if i >= len(expected) or t[0] != expected[i]:
            raise ParseError(f"unexpected token {t[1]!r} at position {t[2]}")
    raise ParseError(f"incomplete exponential expression {text!r}")
