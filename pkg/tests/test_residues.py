"""Canonicalization, set algebra, and text format of residue sets."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macias.residues import ALL, EMPTY, MAX_MODULUS, ResidueSet, make, parse


@st.composite
def residue_sets(draw, max_modulus=36):
    m = draw(st.integers(1, max_modulus))
    rs = draw(st.sets(st.integers(0, m - 1)))
    return make(m, rs)


def members(s, lo, hi):
    """Independent membership oracle used to check the algebra."""
    return {x for x in range(lo, hi + 1) if x % s.modulus in s.residues}


class TestMake:
    def test_canonicalizes_to_minimal_modulus(self):
        assert make(4, {1, 3}) == ResidueSet(2, frozenset({1}))

    def test_empty_and_full(self):
        assert make(7, set()) == EMPTY
        assert make(1, {0}) == ALL
        assert make(6, {0, 1, 2, 3, 4, 5}) == ALL

    def test_residue_out_of_range(self):
        with pytest.raises(ValueError):
            make(7, {7})

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            make(0, set())
        with pytest.raises(ValueError, match="too large"):
            make(MAX_MODULUS + 1, {0})

    @given(residue_sets(), st.integers(1, 10))
    def test_canonicalization_idempotent_through_lift(self, s, k):
        lifted = s.lift(k * s.modulus)
        assert make(lifted.modulus, lifted.residues) == s


class TestContains:
    def test_examples(self):
        assert not make(7, {1, 2, 3, 4, 5, 6}).contains(14)
        assert make(7, {6}).contains(13)
        assert ALL.contains(1)

    def test_zero_not_in_domain(self):
        with pytest.raises(ValueError):
            ALL.contains(0)


class TestLift:
    def test_examples(self):
        assert make(2, {1}).lift(6).residues == frozenset({1, 3, 5})
        assert ALL.lift(5).residues == frozenset(range(5))
        assert make(3, {1}).lift(3) == make(3, {1})

    def test_non_multiple_rejected(self):
        with pytest.raises(ValueError):
            make(3, {1}).lift(5)


class TestAlgebra:
    def test_intersection_example(self):
        odd = make(2, {1})
        non3 = make(3, {1, 2})
        assert odd.intersect(non3) == make(6, {1, 5})

    def test_complement_example(self):
        assert make(7, {1, 2, 3, 4, 5, 6}).complement() == make(7, {0})

    def test_union_exhausts_naturals(self):
        w = make(7, {1, 2, 3, 4, 5})
        rest = make(7, {6, 0})
        assert w.union(rest) == ALL

    def test_modulus_overflow_rejected(self):
        a = make(2**20, {1})
        b = make(2**20 - 1, {1})
        with pytest.raises(ValueError, match="too large"):
            a.intersect(b)

    @given(residue_sets(), residue_sets())
    @settings(max_examples=150)
    def test_intersect_union_against_enumeration(self, s, t):
        hi = 1000
        ms, mt = members(s, 1, hi), members(t, 1, hi)
        assert members(s.intersect(t), 1, hi) == ms & mt
        assert members(s.union(t), 1, hi) == ms | mt

    @given(residue_sets())
    def test_double_complement(self, s):
        assert s.complement().complement() == s

    @given(residue_sets(), residue_sets())
    @settings(max_examples=150)
    def test_de_morgan(self, s, t):
        assert s.union(t).complement() == s.complement().intersect(t.complement())
        assert s.intersect(t).complement() == s.complement().union(t.complement())

    @given(residue_sets(), residue_sets(), residue_sets())
    @settings(max_examples=100)
    def test_distributivity(self, s, t, u):
        assert s.intersect(t.union(u)) == s.intersect(t).union(s.intersect(u))

    @given(residue_sets(), residue_sets())
    @settings(max_examples=150)
    def test_equality_matches_enumeration(self, s, t):
        window = 2 * math.lcm(s.modulus, t.modulus)
        same = s.enumerate(1, window) == t.enumerate(1, window)
        assert (s == t) == same


class TestPredicates:
    def test_examples(self):
        assert make(4, {1, 3}) == make(2, {1})
        assert make(1, {0}).is_all()
        assert make(5, set()).is_empty()
        assert not make(5, {0}).is_empty()
        assert not make(5, {0}).is_all()


class TestEnumerate:
    def test_examples(self):
        assert make(7, {6}).enumerate(1, 30) == [6, 13, 20, 27]
        assert ALL.enumerate(1, 3) == [1, 2, 3]
        assert EMPTY.enumerate(1, 100) == []

    def test_window_validation(self):
        with pytest.raises(ValueError):
            ALL.enumerate(0, 10)
        with pytest.raises(ValueError):
            ALL.enumerate(5, 4)


class TestTextFormat:
    def test_formatting(self):
        assert str(make(7, {5, 1, 3})) == "7:{1,3,5}"
        assert str(ALL) == "1:{0}"
        assert str(EMPTY) == "1:{}"

    def test_parse_examples(self):
        assert parse("7:{1,2,3,4,5}") == make(7, {1, 2, 3, 4, 5})
        assert parse("1:{0}") == ALL
        assert parse("1:{}") == EMPTY
        assert parse(" 4 : { 1 , 3 } ") == make(2, {1})

    @given(residue_sets())
    def test_round_trip(self, s):
        assert parse(str(s)) == s

    @pytest.mark.parametrize("text", ["", "7:", "7:{1", ":{1}", "7:{a}", "x", "7{1}"])
    def test_malformed_rejected(self, text):
        with pytest.raises(ValueError):
            parse(text)

    def test_residue_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            parse("7:{9}")
