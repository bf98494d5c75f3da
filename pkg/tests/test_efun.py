import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from muhermite.core import gamma_mu
from muhermite.efun import ConvergenceError, EvalOptions, c_s_mu, e_mu, heat_kernel, mehler_rhs
from muhermite.transform import phi_eval


def test_reduces_to_exp_at_mu_zero():
    for z in (0.3, -1.7, 2.0 + 1.5j, -0.4j, 25.0):
        assert_allclose(e_mu(0.0, z), np.exp(z), rtol=1e-13)


def test_value_at_origin_is_one():
    for mu in (0.0, 0.4, 1.7, -0.2):
        assert e_mu(mu, 0.0) == pytest.approx(1.0, rel=1e-15)


def test_series_terms_are_reciprocal_gamma():
    # e(z) = sum z^n / gamma_mu(n); check against a direct partial sum
    mu, z = 0.8, 0.9
    direct = sum(z**n / gamma_mu(mu, n) for n in range(60))
    assert_allclose(e_mu(mu, z), direct, rtol=1e-14)


def test_array_input_broadcasts():
    z = np.array([0.1, -0.3, 2.0])
    vals = e_mu(0.5, z)
    assert vals.shape == (3,)
    assert_allclose(vals[1], e_mu(0.5, -0.3), rtol=1e-14)


def test_large_argument_positive_mu_stays_accurate():
    # the averaging-measure route has no cancellation at large |x|
    c, s = c_s_mu(1.2, 50.0)
    assert math.isfinite(c) and math.isfinite(s)
    assert c * c + s * s <= 1.0 + 1e-12


def test_cos_sin_matches_series_at_moderate_argument():
    mu, x = 0.7, 3.0
    c, s = c_s_mu(mu, x)
    val = e_mu(mu, complex(0.0, -x))
    assert_allclose(c, val.real, rtol=1e-12, atol=1e-14)
    assert_allclose(s, -val.imag, rtol=1e-12, atol=1e-14)


def test_cos_sin_classical_reduction():
    c, s = c_s_mu(0.0, 2.0)
    assert_allclose((c, s), (math.cos(2.0), math.sin(2.0)), rtol=1e-14)


def test_negative_mu_large_argument_refused():
    with pytest.raises(ConvergenceError, match="mu < 0"):
        c_s_mu(-0.25, 40.0)


@given(st.floats(min_value=-25.0, max_value=25.0), st.sampled_from([0.0, 0.4, 1.7]))
def test_oscillatory_values_stay_in_unit_disc(x, mu):
    c, s = c_s_mu(mu, x)
    assert c * c + s * s <= 1.0 + 1e-10


def test_mehler_rhs_small_z_matches_eigenfunction_series():
    mu, x, y = 0.9, 0.7, -1.1
    z = 0.05
    series = sum(phi_eval(mu, n, x) * phi_eval(mu, n, y) * z**n for n in range(24))
    assert_allclose(mehler_rhs(mu, x, y, z), series, rtol=1e-12)


def test_mehler_rhs_z_zero_is_rank_one():
    mu, x, y = 1.5, 0.4, 0.9
    assert_allclose(
        mehler_rhs(mu, x, y, 0.0), phi_eval(mu, 0, x) * phi_eval(mu, 0, y), rtol=1e-13
    )


class TestHeatKernel:
    def test_symmetry(self):
        assert_allclose(heat_kernel(0.8, 0.5, 1.2, 0.3), heat_kernel(0.8, 1.2, 0.5, 0.3), rtol=1e-13)

    def test_classical_reduction(self):
        x, y, t = 0.4, -0.9, 0.35
        want = math.exp(-((x - y) ** 2) / (4 * t)) / math.sqrt(4 * math.pi * t)
        assert_allclose(heat_kernel(0.0, x, y, t), want, rtol=1e-12)

    def test_positive_for_positive_mu(self):
        rng = np.random.default_rng(42)
        for _ in range(20):
            x, y = rng.uniform(-2, 2, size=2)
            assert heat_kernel(1.5, float(x), float(y), 0.4) > 0

    def test_needs_positive_time(self):
        with pytest.raises(ValueError):
            heat_kernel(0.5, 0.1, 0.2, 0.0)


def test_eval_options_cap_is_enforced():
    opts = EvalOptions(max_terms=4)
    with pytest.raises(ConvergenceError):
        e_mu(0.5, 18.0, opts)
