import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from muhermite.core import gamma_half
from muhermite.efun import e_mu
from muhermite.hermite import hermite_eval
from muhermite.quadrature import gauss_hermite_mu
from muhermite.transform import (
    SpectralVector,
    expand,
    fourier_eigenvalue_pair,
    fourier_quadrature,
    fourier_spectral,
    l2mu_norm,
    operator_matrix,
    phi_eval,
    phi_poly_coeffs,
    phi_poly_table,
    synthesize,
    transform_of_efun_gaussian,
    transform_of_gaussian,
    transform_of_hermite_gaussian,
    transform_of_monomial_gaussian,
)

MUS = (0.0, 0.5, 1.5)


def test_phi_orthonormal_small():
    for mu in MUS:
        rule = gauss_hermite_mu(mu, 48)
        table = phi_poly_table(mu, 8, rule.nodes)
        gram = (table * rule.weights) @ table.T
        assert_allclose(gram, np.eye(9), atol=1e-13)


def test_phi_eval_consistent_with_coefficients():
    x = np.linspace(-2.5, 2.5, 9)
    for n in (0, 3, 6):
        p = phi_poly_coeffs(0.75, n)
        assert_allclose(phi_eval(0.75, n, x), p(x) * np.exp(-0.5 * x * x), rtol=1e-12)


def test_expand_recovers_finite_combination():
    mu = 0.6
    f = lambda t: phi_eval(mu, 3, t) + 0.5 * phi_eval(mu, 7, t)
    vec = expand(mu, f, 10)
    want = np.zeros(11)
    want[3], want[7] = 1.0, 0.5
    assert_allclose(vec.coeffs.real, want, atol=1e-12)
    assert abs(vec.parseval_defect) < 1e-12


def test_synthesize_inverts_expand():
    mu = 1.1
    f = lambda t: (1.0 + t * t) * np.exp(-0.7 * t * t)
    vec = expand(mu, f, 40, sigma=0.7)
    x = np.linspace(-2.0, 2.0, 15)
    assert_allclose(synthesize(vec, x), f(x), rtol=1e-10, atol=1e-12)


def test_parseval_defect_measures_truncation():
    mu = 0.5
    f = lambda t: np.exp(-0.8 * t * t)
    small = expand(mu, f, 4, sigma=0.8).parseval_defect
    large = expand(mu, f, 40, sigma=0.8).parseval_defect
    assert small > large > -1e-13
    assert large < 1e-12


def test_coefficients_are_read_only():
    vec = expand(0.5, lambda t: np.exp(-0.5 * t * t), 6)
    with pytest.raises(ValueError):
        vec.coeffs[0] = 99.0


def test_fourier_eigenvalue_pair_cycles():
    assert fourier_eigenvalue_pair(0, 2, 3) == (2, 3)
    assert fourier_eigenvalue_pair(1, 2, 3) == (3, -2)
    assert fourier_eigenvalue_pair(2, 2, 3) == (-2, -3)
    assert fourier_eigenvalue_pair(3, 2, 3) == (-3, 2)
    for n in range(8):
        re, im = fourier_eigenvalue_pair(n, 1.0, 0.0)
        assert_allclose(complex(re, im), (-1j) ** n)


def test_fourier_spectral_is_diagonal_phase():
    vec = SpectralVector(mu=0.5, coeffs=np.array([1.0, 2.0, 3.0, 4.0]))
    out = fourier_spectral(vec)
    assert_allclose(out.coeffs, [1.0, -2.0j, -3.0, 4.0j])


def test_quadrature_transform_fixes_eigenfunctions():
    x = np.linspace(-3.0, 3.0, 11)
    for mu in MUS:
        for n in (0, 1, 4, 7):
            f = lambda t: hermite_eval(mu, n, t) * np.exp(-0.5 * t * t)
            got = fourier_quadrature(mu, f, x, sigma=0.5)
            want = (-1j) ** n * f(x)
            assert_allclose(got, want, rtol=1e-10, atol=1e-12)


def test_quadrature_transform_inverse_roundtrip():
    # forward via the closed form, back via quadrature; the intermediate
    # must be closed-form so the envelope compensation sees clean tails
    mu, lam = 0.8, 0.9
    f = lambda t: (t + t**3) * np.exp(-lam * t * t)
    g = lambda t: transform_of_monomial_gaussian(mu, 1, lam, t) + transform_of_monomial_gaussian(
        mu, 3, lam, t
    )
    x = np.linspace(-2.0, 2.0, 9)
    back = fourier_quadrature(mu, g, x, sigma=1.0 / (4 * lam), inverse=True)
    assert_allclose(back.real, f(x), rtol=1e-9, atol=1e-11)
    assert_allclose(back.imag, 0.0, atol=1e-11)


class TestClosedForms:
    def test_gaussian_fixed_point(self):
        x = np.linspace(-2.0, 2.0, 7)
        for mu in MUS:
            got = transform_of_gaussian(mu, 0.5, x)
            assert_allclose(got, np.exp(-0.5 * x * x), rtol=1e-13)

    def test_gaussian_general_rate_vs_quadrature(self):
        mu, lam = 0.75, 1.4
        x = np.linspace(-1.5, 1.5, 7)
        want = fourier_quadrature(mu, lambda t: np.exp(-lam * t * t), x, sigma=lam)
        assert_allclose(transform_of_gaussian(mu, lam, x), want.real, rtol=1e-11)
        assert_allclose(want.imag, 0.0, atol=1e-12)

    def test_monomial_gaussian_vs_quadrature(self):
        mu, lam, n = 0.5, 0.8, 3
        x = np.linspace(-1.5, 1.5, 5)
        want = fourier_quadrature(mu, lambda t: t**n * np.exp(-lam * t * t), x, sigma=lam)
        got = transform_of_monomial_gaussian(mu, n, lam, x)
        assert_allclose(got, want, rtol=1e-10, atol=1e-13)

    def test_efun_gaussian_vs_quadrature(self):
        # closed form transforms e(+iyt) e^(-lam t^2)
        mu, lam, y = 1.2, 0.9, 0.7
        x = np.linspace(-1.0, 1.0, 5)
        f = lambda t: np.exp(-lam * t * t) * e_mu(mu, np.asarray(1j * y * t))
        want = fourier_quadrature(mu, f, x, sigma=lam)
        got = transform_of_efun_gaussian(mu, lam, y, x)
        assert_allclose(got, want, rtol=1e-10, atol=1e-13)

    def test_hermite_gaussian_needs_dominant_decay(self):
        with pytest.raises(ValueError):
            transform_of_hermite_gaussian(0.5, 2, 1.0, 1.1, np.array([0.0]))


def test_l2mu_norm_of_ground_gaussian():
    for mu in (0.0, 0.75, 1.5):
        got = l2mu_norm(lambda t: np.exp(-0.5 * t * t), sigma=0.5, mu=mu)
        assert_allclose(got, math.sqrt(gamma_half(mu)), rtol=1e-13)


class TestOperatorMatrix:
    def test_lowering_entries(self):
        mu = 0.5
        m = operator_matrix(mu, "A", 6).matrix
        for n in range(1, 6):
            assert_allclose(m[n - 1, n], math.sqrt(n + 2 * mu * (n % 2)), rtol=1e-15)
        assert np.count_nonzero(m) == 5

    def test_adjoint_pair(self):
        a = operator_matrix(0.75, "A", 8).matrix
        adag = operator_matrix(0.75, "Adag", 8).matrix
        assert_allclose(adag, a.conj().T, atol=1e-15)

    def test_position_momentum_hermitian(self):
        for kind in ("Q", "P", "H"):
            m = operator_matrix(0.8, kind, 10).matrix
            assert_allclose(m, m.conj().T, atol=1e-14)

    def test_parity_and_transform_diagonals(self):
        j = operator_matrix(0.5, "J", 6).matrix
        f = operator_matrix(0.5, "F", 6).matrix
        assert_allclose(np.diag(j), [1, -1, 1, -1, 1, -1], atol=1e-15)
        assert_allclose(np.diag(f), [(-1j) ** n for n in range(6)], atol=1e-15)
        assert_allclose(f @ f @ f @ f, np.eye(6), atol=1e-14)

    def test_energy_levels(self):
        mu = 1.5
        h = operator_matrix(mu, "H", 7).matrix
        assert_allclose(np.diag(h).real, [n + mu + 0.5 for n in range(7)], rtol=1e-15)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            operator_matrix(0.5, "X", 4)
