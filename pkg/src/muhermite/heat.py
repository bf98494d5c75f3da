"""The deformed heat semigroup: kernel, closed forms, polynomials, PDE checks.

Three independent realizations of T(t) = exp(t D^2), with D the Dunkl
derivative, are kept first-class and cross-checked:

  * kernel quadrature     -- integrate the positive kernel against f,
  * Gaussian closed form  -- the semigroup maps the two-parameter family
                             e^(-alpha x^2) e(2 z x; mu) onto itself,
  * spectral              -- exp(-t P^2) as a matrix on the eigenfunction
                             basis, P the momentum matrix.

Time convention trap: the closed-form map is classically stated in a
time variable equal to 4x the semigroup time.  Every public operation
here takes semigroup time t (the t of exp(t D^2)); the substitution
happens internally, once, in heat_gaussian_params.

On polynomials the semigroup is the finite sum exp(t D^2) x^n
(heat_on_monomial); its t-derivative equals D^2 applied to it, exactly,
which the rational-arithmetic identity suite certifies.
"""

from __future__ import annotations

import math

import numpy as np

from .core import as_mu
from .efun import EvalOptions, e_mu, heat_kernel
from .hermite import heat_poly
from .poly import DensePoly
from .quadrature import gauss_hermite_mu
from .transform import operator_matrix

__all__ = [
    "heat_on_monomial",
    "heat_gaussian_params",
    "heat_gaussian",
    "heat_odd_gaussian",
    "heat_apply_kernel",
    "heat_pde_residual",
    "expm_symmetric",
    "heat_spectral_matrix",
]

_KERNEL_OPTIONS = EvalOptions(max_terms=2000)


def heat_on_monomial(mu, n: int, t, *, exact: bool = False) -> DensePoly:
    """exp(t D^2) x^n: a polynomial in x whose coefficients are polynomials in t.

    At t = 0 this is x^n; at mu = 0, n = 2 it is the classical x^2 + 2t.
    """
    return heat_poly(mu, n, t, exact=exact)


def heat_gaussian_params(mu, alpha, z, t: float):
    """Parameters of T(t) applied to e^(-alpha x^2) e(2 z x; mu).

    Returns (pref, alpha', z') with

        u = 1 + 4 alpha t,   pref = u^(-mu-1/2) exp(4 t z^2 / u),
        alpha' = alpha / u,  z' = z / u,

    so the image is pref * e^(-alpha' x^2) e(2 z' x; mu).  alpha and z
    may be complex (Re alpha > 0); t is semigroup time >= 0.
    """
    value = as_mu(mu).require_numeric()
    if not (alpha.real if isinstance(alpha, complex) else alpha) > 0:
        raise ValueError("the Gaussian rate alpha must have positive real part")
    if t < 0:
        raise ValueError("semigroup time must be nonnegative")
    u = 1.0 + 4.0 * alpha * t
    if abs(u) < 1e-12:
        raise ValueError("1 + 4 alpha t vanishes; the Gaussian image degenerates")
    pref = u ** (-value - 0.5) * (
        np.exp(4.0 * t * z * z / u) if isinstance(z, complex) else math.exp(4.0 * t * z * z / u)
    )
    return pref, alpha / u, z / u


def heat_gaussian(mu, alpha, z, t: float, x, options: EvalOptions | None = None):
    """T(t) of e^(-alpha x^2) e(2 z x; mu), evaluated at x (scalar or array)."""
    value = as_mu(mu).require_numeric()
    pref, ap, zp = heat_gaussian_params(value, alpha, z, t)
    xa = np.asarray(x, dtype=float)
    out = pref * np.exp(-ap * xa * xa) * e_mu(value, 2.0 * zp * xa, options)
    if np.isscalar(x):
        return complex(out) if np.iscomplexobj(np.asarray(out)) else float(out)
    return out


def heat_odd_gaussian(mu, alpha: float, t: float, x):
    """T(t) of the odd Gaussian x e^(-alpha x^2):

        x (1 + 4 alpha t)^(-mu - 3/2) e^(-alpha x^2 / (1 + 4 alpha t)).

    Obtained from heat_gaussian by differentiating in z at z = 0.
    """
    value = as_mu(mu).require_numeric()
    if not alpha > 0:
        raise ValueError("the Gaussian rate alpha must be positive")
    if t < 0:
        raise ValueError("semigroup time must be nonnegative")
    u = 1.0 + 4.0 * alpha * t
    xa = np.asarray(x, dtype=float)
    out = xa * u ** (-value - 1.5) * np.exp(-alpha * xa * xa / u)
    return float(out) if np.isscalar(x) else out


def heat_apply_kernel(mu, f, t: float, x, *, quad_n: int = 96):
    """T(t) f at x by quadrature of the positive kernel.

    The substitution y = 2 sqrt(t) u maps the kernel's Gaussian onto the
    rule's weight, leaving

        (T(t) f)(x) = Gamma(mu+1/2)^(-1) e^(-x^2/4t)
                      * sum_i w_i e(x u_i / sqrt(t); mu) f(2 sqrt(t) u_i).
    """
    value = as_mu(mu).require_numeric()
    if not t > 0:
        raise ValueError("kernel form needs t > 0")
    scalar = np.isscalar(x)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    rule = gauss_hermite_mu(value, quad_n)
    st = math.sqrt(t)
    fvals = np.asarray(f(2.0 * st * rule.nodes), dtype=float)
    kern = e_mu(value, np.outer(xa, rule.nodes) / st, _KERNEL_OPTIONS)
    mass = rule.mass  # Gamma(mu + 1/2)
    vals = np.exp(-xa * xa / (4.0 * t)) / mass * (kern @ (rule.weights * fvals))
    return float(vals[0]) if scalar else vals


def _even_family(value, alpha):
    def psi(x, t):
        u = 1.0 + 4.0 * alpha * t
        return u ** (-value - 0.5) * math.exp(-alpha * x * x / u)

    return psi


def _odd_family(value, alpha):
    def psi(x, t):
        u = 1.0 + 4.0 * alpha * t
        return x * u ** (-value - 1.5) * math.exp(-alpha * x * x / u)

    return psi


def heat_pde_residual(
    mu,
    family: str,
    t: float,
    x: float,
    *,
    h: float = 1e-4,
    alpha: float = 1.0,
) -> float:
    """Finite-difference defect of the radial heat equation on a closed-form flow.

    family 'even': psi_t = psi_xx + (2 mu / x) psi_x
    family 'odd' : psi_t = psi_xx + (2 mu / x) psi_x - (2 mu / x^2) psi

    Central differences with step h in both variables; needs t > h and
    |x| >= 0.1 (the 1/x terms are genuinely singular at the origin).
    """
    value = as_mu(mu).require_numeric()
    if family == "even":
        psi = _even_family(value, alpha)
    elif family == "odd":
        psi = _odd_family(value, alpha)
    else:
        raise ValueError("family must be 'even' or 'odd'")
    if abs(x) < 0.1:
        raise ValueError("residual check excludes |x| < 0.1 near the 1/x singularity")
    if not t > h:
        raise ValueError("need t > h for the centered time difference")
    pt = (psi(x, t + h) - psi(x, t - h)) / (2.0 * h)
    px = (psi(x + h, t) - psi(x - h, t)) / (2.0 * h)
    pxx = (psi(x + h, t) - 2.0 * psi(x, t) + psi(x - h, t)) / (h * h)
    rhs = pxx + (2.0 * value / x) * px
    if family == "odd":
        rhs -= (2.0 * value / (x * x)) * psi(x, t)
    return abs(pt - rhs)


def expm_symmetric(m: np.ndarray) -> np.ndarray:
    """Matrix exponential of a real symmetric matrix by scaling and squaring.

    The scaled matrix (norm <= 1/2) is exponentiated by a Taylor sum to
    machine precision, then repeatedly squared.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expm_symmetric needs a square matrix")
    norm = float(np.linalg.norm(m, 1))
    squarings = max(0, int(math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0)
    a = m / (2.0**squarings)
    out = np.eye(m.shape[0])
    term = np.eye(m.shape[0])
    for k in range(1, 24):
        term = term @ a / k
        out = out + term
        if float(np.max(np.abs(term))) < 1e-18:
            break
    for _ in range(squarings):
        out = out @ out
    return out


def heat_spectral_matrix(mu, t: float, size: int) -> np.ndarray:
    """exp(-t P^2) on the truncated eigenfunction basis (real symmetric).

    Truncating P corrupts the last rows of P^2; trust only coefficients
    well inside the block, or inputs whose expansion has decayed by then.
    """
    value = as_mu(mu).require_numeric()
    if t < 0:
        raise ValueError("semigroup time must be nonnegative")
    p = operator_matrix(value, "P", size).matrix
    p2 = (p @ p).real
    return expm_symmetric(-t * p2)
