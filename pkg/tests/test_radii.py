"""Radius arithmetic: exact rationals plus a single infinite value.

Laws under test:
1. Ordering: the infinite radius exceeds every finite radius, from both sides.
2. Absorption: infinity + finite = infinity.
3. Parsing accepts ints, Fractions, "p/q" strings, [num, den] pairs, "inf";
   rejects floats, bools, and negatives.
4. JSON round trip is the identity on canonical values.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftcolor.radii import (
    INF,
    Infinity,
    as_radius,
    radius_ceil,
    radius_floor,
    radius_from_json,
    radius_to_json,
)


class TestInfinity:
    def test_singleton(self):
        assert Infinity() is INF

    def test_dominates_ints(self):
        assert INF > 10**9
        assert 10**9 < INF
        assert not (INF < 5)
        assert INF >= INF and INF <= INF and INF == INF

    def test_dominates_fractions(self):
        assert INF > Fraction(7, 2)
        assert Fraction(7, 2) < INF

    @given(st.integers(min_value=0, max_value=10**6))
    def test_absorbs_addition(self, n):
        assert INF + n is INF
        assert n + INF is INF

    def test_multiplication_absorbs(self):
        assert 2 * INF is INF
        assert INF * 3 is INF


class TestAsRadius:
    def test_int_passthrough(self):
        assert as_radius(5) == 5
        assert isinstance(as_radius(5), int)

    def test_fraction_normalizes_to_int(self):
        assert as_radius(Fraction(6, 2)) == 3
        assert isinstance(as_radius(Fraction(6, 2)), int)

    def test_fraction_kept_when_proper(self):
        r = as_radius(Fraction(7, 2))
        assert r == Fraction(7, 2)

    def test_string_forms(self):
        assert as_radius("inf") is INF
        assert as_radius("7/2") == Fraction(7, 2)

    def test_pair_form(self):
        assert as_radius([7, 2]) == Fraction(7, 2)

    def test_rejects_float(self):
        with pytest.raises((TypeError, ValueError)):
            as_radius(1.5)

    def test_rejects_bool(self):
        with pytest.raises((TypeError, ValueError)):
            as_radius(True)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            as_radius(-1)
        with pytest.raises(ValueError):
            as_radius(Fraction(-1, 2))


class TestFloorCeil:
    def test_int_fixed_points(self):
        assert radius_floor(4) == 4
        assert radius_ceil(4) == 4

    def test_fraction(self):
        assert radius_floor(Fraction(7, 2)) == 3
        assert radius_ceil(Fraction(7, 2)) == 4

    def test_infinite_rejected(self):
        with pytest.raises(ValueError):
            radius_floor(INF)
        with pytest.raises(ValueError):
            radius_ceil(INF)

    @given(st.fractions(min_value=0, max_value=1000))
    def test_floor_le_ceil(self, q):
        assert radius_floor(q) <= q <= radius_ceil(q)


class TestJson:
    @given(st.one_of(st.integers(min_value=0, max_value=10**6), st.fractions(min_value=0, max_value=100)))
    def test_roundtrip_finite(self, r):
        r = as_radius(Fraction(r))
        assert radius_from_json(radius_to_json(r)) == r

    def test_roundtrip_inf(self):
        assert radius_from_json(radius_to_json(INF)) is INF

    def test_encodings(self):
        assert radius_to_json(3) == 3
        assert radius_to_json(Fraction(7, 2)) == "7/2"
        assert radius_to_json(INF) == "inf"
