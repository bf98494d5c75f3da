import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from muhermite.core import (
    MuParam,
    alpha_mu_moment,
    as_mu,
    beta_function,
    gamma_half,
    gamma_mu,
    gamma_mu_exact,
    gamma_table,
    log_gamma_mu,
    mu_binomial,
    mu_binomial_exact,
    theta,
)


def test_theta_is_parity_indicator():
    assert [theta(n) for n in range(6)] == [0, 1, 0, 1, 0, 1]


class TestMuParam:
    def test_parse_fraction_is_exact(self):
        mu = MuParam.parse("1/3")
        assert mu.exact == Fraction(1, 3)
        assert mu.value == pytest.approx(1 / 3)

    def test_parse_integer_is_exact(self):
        assert MuParam.parse("2").exact == Fraction(2)

    def test_parse_decimal_is_numeric_only(self):
        mu = MuParam.parse("0.5")
        assert mu.exact is None
        assert mu.value == 0.5

    def test_numeric_guard_fires_on_use(self):
        mu = MuParam.parse("-0.75")  # parsing is permissive
        with pytest.raises(ValueError, match="mu must exceed -1/2"):
            mu.require_numeric()

    def test_exact_pole_rejected_at_construction(self):
        for text in ("-1/2", "-3/2"):
            with pytest.raises(ValueError, match="pole"):
                MuParam.parse(text)
        assert MuParam.parse("-1/4").exact == Fraction(-1, 4)

    def test_as_mu_accepts_float_fraction_and_param(self):
        assert as_mu(0.5).value == 0.5
        assert as_mu(Fraction(1, 2)).exact == Fraction(1, 2)
        p = MuParam.parse("1/4")
        assert as_mu(p) is p

    def test_require_exact_guard(self):
        with pytest.raises(ValueError, match="exact"):
            as_mu(0.7).require_exact()


class TestGammaMu:
    def test_classical_reduction_is_factorial(self):
        for n in range(12):
            assert gamma_mu_exact(Fraction(0), n) == math.factorial(n)

    def test_recursion_step(self):
        mu = Fraction(1, 3)
        for n in range(1, 15):
            step = n + 2 * mu * theta(n)
            assert gamma_mu_exact(mu, n) == step * gamma_mu_exact(mu, n - 1)

    def test_float_matches_exact(self):
        for mu in (0.0, 0.5, 1.5, -0.25):
            ex = gamma_mu_exact(Fraction(mu), 17)
            assert_allclose(gamma_mu(mu, 17), float(ex), rtol=1e-13)

    def test_log_form(self):
        for n in (0, 1, 7, 40):
            assert_allclose(
                log_gamma_mu(0.75, n), math.log(gamma_mu(0.75, n)), rtol=1e-12
            )

    def test_even_value_via_gamma_function(self):
        # gamma_mu(2r) = 2^(2r) r! Gamma(r + mu + 1/2) / Gamma(mu + 1/2)
        mu = 0.8
        for r in range(1, 9):
            want = (
                4.0**r
                * math.factorial(r)
                * math.gamma(r + mu + 0.5)
                / math.gamma(mu + 0.5)
            )
            assert_allclose(gamma_mu(mu, 2 * r), want, rtol=1e-12)

    def test_table_matches_scalar(self):
        t = gamma_table(0.5, 10)
        assert len(t.values) >= 11  # table may precompute past the request
        assert_allclose(t.values[:11], [gamma_mu(0.5, n) for n in range(11)], rtol=1e-14)
        assert_allclose(t.log_values[1:11], np.log(t.values[1:11]), rtol=1e-13)

    @given(st.integers(min_value=0, max_value=30))
    def test_positive_and_increasing_from_one(self, n):
        g = gamma_mu(0.9, n)
        assert g > 0
        if n >= 1:
            assert g >= gamma_mu(0.9, n - 1)


def test_mu_binomial_symmetry_and_normalization():
    mu = Fraction(3, 4)
    for n in range(9):
        for j in range(n + 1):
            b = mu_binomial_exact(mu, n, j)
            assert b == mu_binomial_exact(mu, n, n - j)
            assert b > 0
            assert_allclose(mu_binomial(float(mu), n, j), float(b), rtol=1e-13)
    assert mu_binomial_exact(mu, 6, 0) == 1


def test_alpha_mu_moment_is_factorial_over_gamma():
    for mu in (0.3, 0.75, 2.0):
        for n in range(10):
            want = math.factorial(n) / gamma_mu(mu, n)
            assert_allclose(alpha_mu_moment(mu, n), want, rtol=1e-13)


def test_gamma_half_and_beta():
    assert_allclose(gamma_half(0.0), math.sqrt(math.pi), rtol=1e-15)
    assert_allclose(gamma_half(0.5), 1.0, rtol=1e-15)
    assert_allclose(beta_function(2.5, 1.5), math.gamma(2.5) * math.gamma(1.5) / math.gamma(4.0), rtol=1e-13)
