"""Unit and property tests for the paired-sequence statistics layer."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cccmap import (
    DegenerateVariance,
    InvalidInput,
    ccc,
    covariance,
    lp_norm,
    mae,
    mean,
    mke,
    mse,
    pair_stats,
    pearson,
    population_variance,
)

finite_floats = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def seqs(min_size=1, max_size=40):
    return st.lists(finite_floats, min_size=min_size, max_size=max_size)


class TestMean:
    def test_symmetric(self):
        assert mean([1, 2, 3]) == 2.0

    def test_zeros(self):
        assert mean([0, 0, 0, 0]) == 0.0

    def test_thirds(self):
        # direct sum/3
        assert mean([0.1, 0.2, 0.7]) == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            mean([])

    def test_nan_rejected(self):
        with pytest.raises(InvalidInput):
            mean([1.0, float("nan")])


class TestPopulationVariance:
    def test_constant(self):
        assert population_variance([5.5, 5.5, 5.5]) == 0.0

    def test_hand_computed(self):
        # (1 + 0 + 1)/3
        assert population_variance([1, 2, 3]) == pytest.approx(2.0 / 3.0, rel=1e-12)

    def test_symmetric_pair(self):
        assert population_variance([-1, 1]) == 1.0


class TestCovariance:
    def test_self_is_variance(self):
        assert covariance([1, 2, 3], [1, 2, 3]) == pytest.approx(2.0 / 3.0, rel=1e-12)

    def test_sign_flip(self):
        assert covariance([1, 2, 3], [3, 2, 1]) == pytest.approx(-2.0 / 3.0, rel=1e-12)

    def test_constant_second(self):
        assert covariance([1, 2, 3], [5, 5, 5]) == 0.0

    def test_length_mismatch(self):
        with pytest.raises(InvalidInput):
            covariance([1, 2], [1, 2, 3])


class TestPearson:
    def test_exact_linear(self):
        x = np.array([1.0, 2.0, 3.0])
        assert pearson(x, 2 * x + 3) == pytest.approx(1.0, abs=1e-15)

    def test_negation(self):
        x = np.array([1.0, 2.0, 3.0])
        assert pearson(x, -x) == pytest.approx(-1.0, abs=1e-15)

    def test_hand_computed(self):
        # cov=1, var=var=1.25 -> 0.8
        assert pearson([1, 2, 3, 4], [1, 2, 4, 3]) == pytest.approx(0.8, rel=1e-12)

    def test_constant_rejected(self):
        with pytest.raises(DegenerateVariance):
            pearson([1, 1, 1], [1, 2, 3])


class TestCcc:
    def test_identity(self):
        assert ccc([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0, abs=1e-15)

    def test_exact_negation_zero_mean(self):
        assert ccc([1, 0, -1], [-1, 0, 1]) == pytest.approx(-1.0, abs=1e-15)

    def test_shifted_pair(self):
        # var 2/3 each, cov 2/3, mean gap 1 -> 4/7
        assert ccc([1, 2, 3], [2, 3, 4]) == pytest.approx(4.0 / 7.0, rel=1e-12)

    def test_zero_cov_is_exact_zero(self):
        assert ccc([1, 2, 3], [2, 2, 2]) == 0.0

    def test_both_constant_rejected(self):
        with pytest.raises(DegenerateVariance):
            ccc([1, 1, 1], [2, 2, 2])


class TestNormsAndErrors:
    def test_l2_of_ones(self):
        assert lp_norm([1, 1, 1], 2) == pytest.approx(math.sqrt(3), rel=1e-15)

    def test_pythagorean(self):
        assert lp_norm([3, -4], 2) == pytest.approx(5.0, abs=1e-15)

    def test_l1_absolute_sum(self):
        assert lp_norm([1, -2, 3], 1) == pytest.approx(6.0, abs=1e-15)

    def test_bad_p(self):
        with pytest.raises(InvalidInput):
            lp_norm([1, 2], 0.0)

    def test_unit_offsets(self):
        assert mse([1, 2, 3], [2, 3, 4]) == pytest.approx(1.0, abs=1e-15)

    def test_identical_inputs_zero(self):
        x = [0.3, 1.7, -2.2]
        assert mse(x, x) == 0.0
        assert mae(x, x) == 0.0
        assert mke(x, x, 4) == 0.0

    def test_power_sum(self):
        # errors [1, 2], k=4 -> (1 + 16)/2
        assert mke([1, 2], [0, 0], 4) == pytest.approx(8.5, rel=1e-12)

    def test_mismatch(self):
        with pytest.raises(InvalidInput):
            mse([1], [1, 2])


class TestPairStats:
    def test_blocks_agree_with_scalar_functions(self):
        x, y = [1.0, 2.0, 3.0, 4.0], [1.5, 2.0, 4.0, 3.0]
        s = pair_stats(x, y)
        assert s.ccc == ccc(x, y)
        assert s.pearson == pearson(x, y)
        assert s.mse == mse(x, y)
        assert 0 < s.c_b <= 1
        # c_b * pearson == ccc
        assert s.c_b * s.pearson == pytest.approx(s.ccc, rel=1e-12)

    def test_constant_rejected(self):
        with pytest.raises(DegenerateVariance):
            pair_stats([1, 1, 1], [1, 2, 3])

    def test_ccc_equals_pearson_iff_matched_moments(self):
        rng = np.random.default_rng(12)
        x = rng.uniform(-3, 3, 20)
        shuffled = rng.permutation(x)  # same mean and variance
        s = pair_stats(x, shuffled)
        assert s.ccc == pytest.approx(s.pearson, rel=1e-12, abs=1e-15)
        assert s.c_b == pytest.approx(1.0, rel=1e-12)
        shifted = pair_stats(x, x + 1.0)  # mean gap breaks the equality
        assert abs(shifted.ccc) < abs(shifted.pearson)
        scaled = pair_stats(x, x * 2.0)  # variance gap breaks it too
        assert abs(scaled.ccc) < abs(scaled.pearson)


# ---------------------------------------------------------------------------
# invariants


@given(seqs(min_size=2), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_symmetry(values, rnd):
    x = np.asarray(values)
    y = np.asarray([rnd.uniform(-10, 10) for _ in values])
    assume(population_variance(x) > 0 or population_variance(y) > 0)
    assert ccc(x, y) == pytest.approx(ccc(y, x), rel=1e-12, abs=1e-15)
    assert mse(x, y) == mse(y, x)


@given(seqs(min_size=2), st.integers(0, 2**31))
@settings(max_examples=60, deadline=None)
def test_bound_chain(values, seed):
    x = np.asarray(values)
    rng = np.random.default_rng(seed)
    y = rng.uniform(-10, 10, x.size)
    assume(population_variance(x) > 0 and population_variance(y) > 0)
    rho = pearson(x, y)
    rho_c = ccc(x, y)
    assert -1 <= -abs(rho) <= rho_c + 1e-12
    assert rho_c <= abs(rho) + 1e-12 <= 1 + 1e-12
    if rho != 0:
        assert np.sign(rho_c) in (0.0, np.sign(rho))


@given(seqs(min_size=2))
@settings(max_examples=60, deadline=None)
def test_perfect_agreement_iff_identical(values):
    x = np.asarray(values)
    assume(population_variance(x) > 0)
    assert ccc(x, x) == pytest.approx(1.0, abs=1e-15)
    bumped = x.copy()
    bumped[0] += 1.0 + abs(bumped[0])
    assert ccc(x, bumped) < 1.0


def test_perfect_disagreement_needs_zero_mean():
    # ccc == -1 iff prediction == -gold elementwise, which forces mean zero
    rng = np.random.default_rng(7)
    y = rng.uniform(-5, 5, 9)
    y -= y.mean()
    assert ccc(-y, y) == pytest.approx(-1.0, abs=1e-14)
    shifted = y + 3.0  # nonzero mean: negation no longer attains -1
    assert ccc(-shifted, shifted) > -1.0
    bumped = -y.copy()
    bumped[0] += 0.5
    assert ccc(bumped, y) > -1.0


@given(seqs(min_size=2), st.integers(0, 2**31))
@settings(max_examples=60, deadline=None)
def test_mke_consistency(values, seed):
    x = np.asarray(values)
    rng = np.random.default_rng(seed)
    y = rng.uniform(-10, 10, x.size)
    assert mke(x, y, 2) == pytest.approx(mse(x, y), rel=1e-12, abs=1e-300)
    assert mke(x, y, 1) == pytest.approx(mae(x, y), rel=1e-12, abs=1e-300)


@given(
    seqs(min_size=1),
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=1.01, max_value=4.0),
)
@settings(max_examples=60, deadline=None)
def test_norm_monotonicity(values, r, ratio):
    e = np.asarray(values)
    p = r * ratio
    assert lp_norm(e, p) <= lp_norm(e, r) * (1 + 1e-12) + 1e-300
