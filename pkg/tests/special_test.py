"""Tests for the normal distribution and incomplete beta functions (_special.py)."""
from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
from scipy import special

from ci_metrics._data import DomainError
from ci_metrics._special import normal_cdf
from ci_metrics._special import normal_quantile
from ci_metrics._special import regularized_beta

# =============================================================================
# normal_cdf
# =============================================================================


def test_normal_cdf_at_zero():
    assert normal_cdf(0.0) == 0.5


def test_normal_cdf_upper_two_and_a_half_percent_point():
    assert normal_cdf(1.959963985) == pytest.approx(0.975, abs=1e-9)


@pytest.mark.parametrize('z', (0.1, 0.5, 1.0, 2.5, 4.0, 8.0))
def test_normal_cdf_symmetry(z):
    assert normal_cdf(z) + normal_cdf(-z) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize('z', [k / 4 for k in range(-40, 41)])
def test_normal_cdf_matches_scipy(z):
    assert abs(normal_cdf(z) - special.ndtr(z)) <= 1e-12


def test_normal_cdf_infinite_arguments():
    assert normal_cdf(-math.inf) == 0.0
    assert normal_cdf(math.inf) == 1.0


def test_normal_cdf_rejects_nan():
    with pytest.raises(DomainError):
        normal_cdf(math.nan)


# =============================================================================
# normal_quantile
# =============================================================================


def test_normal_quantile_median():
    assert normal_quantile(0.5) == 0.0


def test_normal_quantile_upper_two_and_a_half_percent_point():
    assert normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-5)


@pytest.mark.parametrize(
    'u',
    (
        pytest.param(0.01, id='lower tail'),
        pytest.param(0.3, id='central'),
        pytest.param(0.999, id='upper tail'),
    ),
)
def test_normal_quantile_round_trip_examples(u):
    assert abs(normal_cdf(normal_quantile(u)) - u) <= 1e-9


def test_normal_quantile_round_trip_on_99_point_grid():
    for k in range(1, 100):
        u = k / 100
        assert abs(normal_cdf(normal_quantile(u)) - u) <= 1e-9, u


@pytest.mark.parametrize('u', (1e-12, 1e-6, 0.001, 0.02, 0.0243, 0.0244, 0.2, 0.8, 0.97, 0.9999))
def test_normal_quantile_matches_scipy(u):
    assert normal_quantile(u) == pytest.approx(special.ndtri(u), abs=1e-9)


@given(st.floats(min_value=1e-10, max_value=1 - 1e-10))
@settings(max_examples=500)
def test_normal_quantile_inverts_normal_cdf(u):
    assert abs(normal_cdf(normal_quantile(u)) - u) <= 1e-9


@given(st.floats(min_value=1e-8, max_value=0.5))
def test_normal_quantile_antisymmetry(u):
    assert normal_quantile(u) == pytest.approx(-normal_quantile(1 - u), abs=1e-7)


@pytest.mark.parametrize(
    'u',
    (
        pytest.param(0.0, id='zero'),
        pytest.param(1.0, id='one'),
        pytest.param(-0.2, id='negative'),
        pytest.param(1.5, id='above one'),
        pytest.param(math.nan, id='nan'),
    ),
)
def test_normal_quantile_domain(u):
    with pytest.raises(DomainError):
        normal_quantile(u)


# =============================================================================
# regularized_beta
# =============================================================================


def _binomial_tail(x: float, a: int, b: int) -> float:
    """I_x(a, b) for integer shapes: P(Binomial(a + b - 1, x) >= a)."""
    n = a + b - 1
    return sum(math.comb(n, k) * x**k * (1 - x) ** (n - k) for k in range(a, n + 1))


@pytest.mark.parametrize('a', (1, 2, 3, 4))
@pytest.mark.parametrize('b', (1, 2, 3, 4))
def test_regularized_beta_integer_shapes_closed_form(a, b):
    for k in range(1, 20):
        x = k / 20
        assert abs(regularized_beta(x, a, b) - _binomial_tail(x, a, b)) <= 1e-10, x


def test_regularized_beta_two_three_at_quarter():
    # 12 * (x^2/2 - 2x^3/3 + x^4/4) at x = 1/4
    assert regularized_beta(0.25, 2, 3) == pytest.approx(0.26171875, abs=1e-12)


def test_regularized_beta_uniform_is_identity():
    assert regularized_beta(0.7, 1, 1) == pytest.approx(0.7, abs=1e-12)


@pytest.mark.parametrize(
    ('a', 'b'),
    (
        pytest.param(0.5, 2.0, id='concave beta'),
        pytest.param(0.5, 0.5, id='arcsine'),
        pytest.param(2.5, 0.7, id='skewed'),
        pytest.param(30.0, 40.0, id='large shapes'),
        pytest.param(0.05, 3.0, id='small a'),
    ),
)
def test_regularized_beta_matches_scipy(a, b):
    for k in range(1, 50):
        x = k / 50
        assert abs(regularized_beta(x, a, b) - special.betainc(a, b, x)) <= 1e-10, x


@given(
    st.floats(min_value=0.0, max_value=1.0),
    st.floats(min_value=0.1, max_value=10.0),
    st.floats(min_value=0.1, max_value=10.0),
)
def test_regularized_beta_reflection(x, a, b):
    assert regularized_beta(x, a, b) == pytest.approx(
        1.0 - regularized_beta(1.0 - x, b, a), abs=1e-10,
    )


def test_regularized_beta_endpoints():
    assert regularized_beta(0.0, 0.3, 4.0) == 0.0
    assert regularized_beta(1.0, 0.3, 4.0) == 1.0


@pytest.mark.parametrize(
    ('x', 'a', 'b'),
    (
        pytest.param(-0.1, 1.0, 1.0, id='x below zero'),
        pytest.param(1.1, 1.0, 1.0, id='x above one'),
        pytest.param(0.5, 0.0, 1.0, id='a zero'),
        pytest.param(0.5, 1.0, -2.0, id='b negative'),
        pytest.param(0.5, math.inf, 1.0, id='a infinite'),
    ),
)
def test_regularized_beta_domain(x, a, b):
    with pytest.raises(DomainError):
        regularized_beta(x, a, b)
