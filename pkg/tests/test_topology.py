"""Basic opens, openness/density deciders, and closures."""
import random

import pytest

from macias.numtheory import radical
from macias.residues import ALL, EMPTY, make
from macias.topology import (
    closure_finite,
    closure_product_check,
    closure_singleton,
    fresh_prime_in_sigma,
    is_dense,
    is_open,
    sigma,
)


class TestSigma:
    def test_examples(self):
        assert sigma(7) == make(7, {1, 2, 3, 4, 5, 6})
        assert sigma(1) == ALL
        assert sigma(12) == make(6, {1, 5})

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sigma(0)

    def test_canonical_modulus_is_radical(self):
        for n in range(1, 1001):
            s = sigma(n)
            assert s.modulus == radical(n)
            assert s == sigma(radical(n))

    def test_intersection_identity_sample(self):
        for n in range(1, 31):
            for m in range(1, 31):
                assert sigma(n * m) == sigma(n).intersect(sigma(m))


class TestIsOpen:
    def test_basic_opens_are_open(self):
        for n in range(1, 101):
            ok, witness = is_open(sigma(n))
            assert ok and witness is None

    def test_example_1_preimage_not_open(self):
        ok, witness = is_open(make(7, {1, 2, 3, 4, 5}))
        assert not ok
        assert witness == 1

    def test_even_numbers_not_open(self):
        ok, _ = is_open(make(2, {0}))
        assert not ok

    def test_empty_and_full_are_open(self):
        assert is_open(EMPTY) == (True, None)
        assert is_open(ALL) == (True, None)

    def test_prime_modulus_trichotomy_exhaustive(self):
        # At a prime modulus the only opens are the empty set, sigma(p),
        # and everything.
        for p in (2, 3, 5, 7, 11, 13):
            sigma_mask = frozenset(range(1, p))
            for mask in range(1 << p):
                rs = frozenset(r for r in range(p) if mask >> r & 1)
                expected = rs in (frozenset(), sigma_mask, frozenset(range(p)))
                assert is_open(make(p, rs))[0] == expected, (p, sorted(rs))

    def test_prime_modulus_trichotomy_sampled(self):
        rng = random.Random(9)
        for p in (17, 19, 23, 29, 31, 37, 41, 43, 47):
            sigma_mask = frozenset(range(1, p))
            for _ in range(60):
                rs = frozenset(r for r in range(p) if rng.random() < 0.5)
                expected = rs in (frozenset(), sigma_mask, frozenset(range(p)))
                assert is_open(make(p, rs))[0] == expected


class TestIsDense:
    def test_examples(self):
        assert is_dense(make(7, {6}))
        assert not is_dense(make(7, {0}))
        assert not is_dense(EMPTY)
        assert is_dense(ALL)

    def test_basic_opens_are_dense(self):
        for n in range(1, 101):
            assert is_dense(sigma(n))


class TestClosures:
    def test_singleton_examples(self):
        assert closure_singleton(12) == make(6, {0})
        assert closure_singleton(1) == ALL
        assert closure_singleton(7) == make(7, {0})

    def test_finite_examples(self):
        assert closure_finite({2, 3}) == make(6, {0, 2, 3, 4})
        assert closure_finite({1}) == ALL
        assert closure_finite({6}) == make(6, {0})

    def test_finite_empty_rejected(self):
        with pytest.raises(ValueError):
            closure_finite(set())

    def test_product_rule_examples(self):
        assert closure_product_check(4, 6)
        for k in (1, 2, 9, 30):
            assert closure_product_check(1, k)
        assert closure_product_check(7, 7)

    def test_product_rule_grid(self):
        for n in range(1, 13):
            for m in range(1, 13):
                assert closure_product_check(n, m)


class TestFreshPrime:
    def test_examples(self):
        assert fresh_prime_in_sigma([2, 3]) == 5
        assert fresh_prime_in_sigma([2, 3, 5, 7]) == 11
        assert fresh_prime_in_sigma([3]) == 2

    def test_rejects_non_primes(self):
        with pytest.raises(ValueError):
            fresh_prime_in_sigma([4])
        with pytest.raises(ValueError):
            fresh_prime_in_sigma([])
