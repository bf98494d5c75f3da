import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from muhermite.core import gamma_mu_exact
from muhermite.heat import (
    expm_symmetric,
    heat_apply_kernel,
    heat_gaussian,
    heat_gaussian_params,
    heat_odd_gaussian,
    heat_on_monomial,
    heat_pde_residual,
    heat_spectral_matrix,
)
from muhermite.transform import SpectralVector, expand, operator_matrix, synthesize


class TestHeatOnMonomial:
    def test_classical_values(self):
        # mu = 0: x^2 -> x^2 + 2t, x^4 -> x^4 + 12 t x^2 + 12 t^2
        two = heat_on_monomial(Fraction(0), 2, Fraction(1, 3), exact=True)
        assert two.coeffs == (Fraction(2, 3), 0, 1)
        four = heat_on_monomial(Fraction(0), 4, Fraction(1, 3), exact=True)
        assert four.coeffs == (Fraction(12, 9), 0, 4, 0, 1)

    def test_deformed_quadratic(self):
        mu = Fraction(1, 3)
        got = heat_on_monomial(mu, 2, Fraction(1), exact=True)
        # D^2 x^2 = gamma(2)/gamma(0) = 2 (1 + 2 mu)
        assert got.coeffs == (2 * (1 + 2 * mu), 0, 1)

    def test_time_zero_is_identity(self):
        got = heat_on_monomial(Fraction(2, 5), 6, Fraction(0), exact=True)
        assert got.coeffs == (0, 0, 0, 0, 0, 0, 1)

    def test_float_route_matches_exact(self):
        ex = heat_on_monomial(Fraction(3, 4), 7, Fraction(2, 5), exact=True)
        fl = heat_on_monomial(0.75, 7, 0.4)
        assert ex.as_float().max_abs_diff(fl) < 1e-12


def test_gaussian_params_algebra():
    # rate alpha flows to alpha / (1 + 4 alpha t)
    mu, alpha, z, t = 0.6, 0.7, 0.3, 0.5
    pref, a2, z2 = heat_gaussian_params(mu, alpha, z, t)
    u = 1 + 4 * alpha * t
    assert_allclose(a2, alpha / u, rtol=1e-14)
    assert_allclose(z2, z / u, rtol=1e-14)
    assert pref > 0


class TestGaussianRoutes:
    @pytest.mark.parametrize("mu", [0.0, 0.5, 1.5])
    @pytest.mark.parametrize("t", [0.1, 0.5, 2.0])
    def test_even_closed_vs_kernel(self, mu, t):
        alpha = 0.8
        x = np.linspace(-2.0, 2.0, 9)
        closed = heat_gaussian(mu, alpha, 0.0, t, x).real
        kernel = heat_apply_kernel(mu, lambda u: np.exp(-alpha * u * u), t, x)
        assert_allclose(kernel, closed, rtol=1e-8, atol=1e-10)

    def test_odd_closed_vs_kernel(self):
        mu, alpha, t = 0.75, 0.9, 0.4
        x = np.linspace(-1.8, 1.8, 7)
        closed = heat_odd_gaussian(mu, alpha, t, x)
        kernel = heat_apply_kernel(mu, lambda u: u * np.exp(-alpha * u * u), t, x)
        assert_allclose(kernel, closed, rtol=1e-8, atol=1e-10)

    def test_spectral_route_agrees(self):
        mu, alpha, t = 0.5, 1.0, 0.3
        x = np.linspace(-2.0, 2.0, 9)
        size = 96
        vec = expand(mu, lambda u: np.exp(-alpha * u * u), size - 1, sigma=alpha)
        flow = heat_spectral_matrix(mu, t, size)
        got = synthesize(SpectralVector(mu, flow @ np.asarray(vec.coeffs)), x).real
        want = heat_gaussian(mu, alpha, 0.0, t, x).real
        assert_allclose(got, want, rtol=1e-7, atol=1e-9)

    def test_time_zero_is_identity(self):
        x = np.linspace(-2.0, 2.0, 9)
        got = heat_gaussian(0.8, 0.6, 0.0, 0.0, x).real
        assert_allclose(got, np.exp(-0.6 * x * x), rtol=1e-14)

    def test_semigroup_composition(self):
        mu, alpha = 1.2, 0.7
        x = np.linspace(-1.5, 1.5, 7)
        pref1, a1, _ = heat_gaussian_params(mu, alpha, 0.0, 0.2)
        step = pref1 * heat_gaussian(mu, a1, 0.0, 0.3, x).real
        once = heat_gaussian(mu, alpha, 0.0, 0.5, x).real
        assert_allclose(step, once, rtol=1e-12)


def test_flow_of_orthogonal_polynomial_times_gaussian():
    # phi_n evolves by a pure eigenvalue factor under the conjugated flow;
    # here check the simplest member: the ground Gaussian e^(-x^2 / 2)
    # flows to a broader Gaussian with the closed-form prefactor
    mu, t = 0.9, 0.6
    x = np.linspace(-2.0, 2.0, 9)
    u = 1.0 + 2.0 * t  # 1 + 4 alpha t at alpha = 1/2
    want = u ** (-mu - 0.5) * np.exp(-0.5 * x * x / u)
    got = heat_gaussian(mu, 0.5, 0.0, t, x).real
    assert_allclose(got, want, rtol=1e-12)


class TestPdeResidual:
    def test_small_on_both_families(self):
        for family in ("even", "odd"):
            for t in (0.3, 1.0):
                res = heat_pde_residual(0.75, family, t, 1.2)
                assert res < 1e-6

    def test_guard_near_origin(self):
        with pytest.raises(ValueError, match=r"\|x\| < 0.1"):
            heat_pde_residual(0.5, "even", 0.5, 0.05)

    def test_guard_short_time(self):
        with pytest.raises(ValueError, match="t > h"):
            heat_pde_residual(0.5, "even", 1e-5, 1.0)


def test_expm_symmetric_matches_eigen_route():
    rng = np.random.default_rng(42)
    b = rng.normal(size=(6, 6))
    m = 0.5 * (b + b.T)
    w, v = np.linalg.eigh(m)
    want = (v * np.exp(w)) @ v.T
    assert_allclose(expm_symmetric(m), want, rtol=1e-12, atol=1e-12)


def test_spectral_matrix_is_heat_of_momentum_square():
    mu, t, size = 0.5, 0.4, 12
    p = operator_matrix(mu, "P", size).matrix
    m = (p @ p).real
    assert_allclose(heat_spectral_matrix(mu, t, size), expm_symmetric(-t * m), rtol=1e-13)
