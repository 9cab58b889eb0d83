"""Counter-based randomness: reproducible, keyed by (seed, step, element).

Laws under test:
1. The 64-bit finalizer matches the published reference outputs (state 0
   produces 0xE220A8397B1DCDAF, then 0x6E789E6AA1B965F4, ...).
2. Scalar and vectorized evaluation are bit-identical.
3. Element codes are injective on the balls the simulations touch.
4. Acceptance thresholds are exact binary fractions: p = 1/2 maps to 2^63.
5. Same key, same bit — across instances; different seeds decorrelate.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shiftcolor.groups import FreeAbelian, FreeGroup
from shiftcolor.rng import (
    RandomField,
    bernoulli_mask,
    bit,
    element_code,
    element_codes,
    mix,
    splitmix64,
)

Z1 = FreeAbelian(1)
Z2 = FreeAbelian(2)
Z4 = FreeAbelian(4)
F2 = FreeGroup(2)


class TestSplitmix:
    def test_reference_outputs(self):
        gamma = 0x9E3779B97F4A7C15
        assert splitmix64(0) == 0xE220A8397B1DCDAF
        assert splitmix64(gamma) == 0x6E789E6AA1B965F4
        assert splitmix64((2 * gamma) % 2**64) == 0x06C45D188009454F

    def test_mix_regression(self):
        # frozen value of this implementation's keyed chain
        assert mix(1, 2, 3) == 0xD0734750FDE362B3

    def test_mix_order_sensitivity(self):
        assert mix(1, 2) != mix(2, 1)


class TestElementCodes:
    def test_injective_on_balls(self):
        for g, center, r in ((Z1, 0, 20), (Z2, (0, 0), 6), (F2, "", 4), (Z4, (0,) * 4, 3)):
            pts = g.ball(center, r)
            codes = [element_code(g, e) for e in pts]
            assert len(set(codes)) == len(pts)

    def test_z1_packing_is_zigzag(self):
        # nonnegative n -> 2n, negative n -> -2n-1, in the low 21 bits
        assert element_code(Z1, 0) == 0
        assert element_code(Z1, 1) == 2
        assert element_code(Z1, -1) == 1

    def test_fk_identity_is_zero(self):
        assert element_code(F2, "") == 0

    def test_vector_matches_scalar(self):
        pts = F2.ball("", 3)
        vec = element_codes(F2, pts)
        assert list(vec) == [element_code(F2, e) for e in pts]


class TestBernoulli:
    def test_half_threshold_exact(self):
        from shiftcolor.rng import _threshold

        assert _threshold(Fraction(1, 2)) == 2**63
        assert _threshold(Fraction(1, 4)) == 2**62

    @given(
        seed=st.integers(0, 2**32), step=st.integers(0, 1000), n=st.integers(-100, 100)
    )
    @settings(max_examples=60)
    def test_scalar_vector_agree(self, seed, step, n):
        code = element_code(Z1, n)
        scalar = bit(seed, step, code, Fraction(1, 2))
        vec = bernoulli_mask(seed, step, np.array([code], dtype=np.uint64), Fraction(1, 2))
        assert bool(vec[0]) == scalar

    def test_field_mask_equals_scalar_loop(self):
        field = RandomField(Z1, 42, Fraction(1, 3))
        pts = Z1.ball(0, 30)
        codes = element_codes(Z1, pts)
        mask = field.mask(7, codes)
        assert [bool(b) for b in mask] == [field.value(7, e) for e in pts]

    def test_reproducible_across_instances(self):
        a = RandomField(Z1, 5, Fraction(1, 2))
        b = RandomField(Z1, 5, Fraction(1, 2))
        assert a.value(3, 10) == b.value(3, 10)

    def test_seed_changes_bits(self):
        pts = Z1.ball(0, 200)
        codes = element_codes(Z1, pts)
        m0 = bernoulli_mask(0, 0, codes, Fraction(1, 2))
        m1 = bernoulli_mask(1, 0, codes, Fraction(1, 2))
        assert (m0 != m1).any()

    def test_density_sane(self):
        pts = Z1.ball(0, 2000)
        codes = element_codes(Z1, pts)
        mask = bernoulli_mask(0, 0, codes, Fraction(1, 8))
        assert 0.08 <= mask.mean() <= 0.17

    def test_p_bounds_validated(self):
        with pytest.raises(ValueError):
            RandomField(Z1, 0, Fraction(0))
        with pytest.raises(ValueError):
            RandomField(Z1, 0, Fraction(1))
