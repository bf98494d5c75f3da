"""Eigenfunction basis, spectral expansions, and the deformed Fourier transform.

The orthonormal basis of L^2(|x|^(2 mu) dx) is

    phi_n(x) = sqrt(gamma_mu(n) / Gamma(mu + 1/2)) / (2^(n/2) n!)
               * e^(-x^2/2) H_n(x; mu),

satisfying the normalized recurrence x phi_n = sqrt(b_{n+1}) phi_{n+1}
+ sqrt(b_n) phi_{n-1} with b_k = (k + 2 mu theta(k)) / 2.  The deformed
Fourier transform

    (F f)(x) = (2^(mu+1/2) Gamma(mu+1/2))^(-1)
               * integral e(-ixt; mu) f(t) |t|^(2 mu) dt

is diagonal on this basis with eigenvalues (-i)^n, so it has two
realizations kept deliberately separate: multiplication by (-i)^n on
expansion coefficients (exact), and direct quadrature of the integral
(a genuine discretization).  Tests drive one against the other.

Quadrature-backed operations require the caller to state a Gaussian
envelope rate sigma, meaning f(t) = g(t) e^(-sigma t^2) with g of at
most polynomial growth.  The substitution t -> t / sqrt(sigma + c)
(c = 0 or 1/2 depending on the operation) then matches the rule's
e^(-t^2) weight analytically, so no oscillatory or unbounded factor is
ever integrated blindly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import as_mu, gamma_half, gamma_mu, log_gamma_mu, theta
from .efun import EvalOptions, e_mu
from .hermite import hermite_coeffs, hermite_eval
from .poly import DensePoly
from .quadrature import gauss_alpha_mu, gauss_hermite_mu

__all__ = [
    "SpectralVector",
    "OperatorMatrix",
    "phi_eval",
    "phi_poly_table",
    "phi_poly_coeffs",
    "expand",
    "synthesize",
    "l2mu_norm",
    "fourier_spectral",
    "fourier_eigenvalue_pair",
    "fourier_quadrature",
    "transform_of_gaussian",
    "transform_of_monomial_gaussian",
    "transform_of_efun_gaussian",
    "transform_of_hermite_gaussian",
    "operator_matrix",
]


@dataclass(frozen=True)
class SpectralVector:
    """Expansion coefficients against the phi basis for one mu."""

    mu: float
    coeffs: np.ndarray
    parseval_defect: float | None = None

    def __post_init__(self) -> None:
        self.coeffs.setflags(write=False)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


@dataclass(frozen=True)
class OperatorMatrix:
    """Truncated matrix of one canonical operator on the phi basis.

    Truncation corrupts the last rows/columns of operator products;
    identity checks must stay on interior indices (see the oscillator
    module for the policy).
    """

    kind: str
    mu: float
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def phi_poly_table(mu, n_max: int, x: np.ndarray) -> np.ndarray:
    """Polynomial factors phi_n(x) e^(x^2/2), n = 0..n_max, all x at once."""
    value = as_mu(mu).require_numeric()
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((n_max + 1, x.size))
    out[0] = 1.0 / math.sqrt(gamma_half(value))
    if n_max >= 1:
        b = [0.0] + [(k + 2.0 * value * theta(k)) / 2.0 for k in range(1, n_max + 1)]
        out[1] = x * out[0] / math.sqrt(b[1])
        for n in range(1, n_max):
            out[n + 1] = (x * out[n] - math.sqrt(b[n]) * out[n - 1]) / math.sqrt(b[n + 1])
    return out


def phi_eval(mu, n: int, x):
    """Eigenfunction phi_n at x (scalar or ndarray)."""
    scalar = np.isscalar(x)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    vals = phi_poly_table(mu, n, xa)[n] * np.exp(-0.5 * xa * xa)
    return float(vals[0]) if scalar else vals


def phi_poly_coeffs(mu, n: int) -> DensePoly:
    """phi_n's polynomial factor as an explicit coefficient vector."""
    value = as_mu(mu).require_numeric()
    log_norm = (
        0.5 * log_gamma_mu(value, n)
        - 0.5 * math.log(gamma_half(value))
        - 0.5 * n * math.log(2.0)
        - math.lgamma(n + 1)
    )
    return hermite_coeffs(value, n).scale(math.exp(log_norm))


def expand(
    mu,
    f,
    n_max: int,
    *,
    sigma: float = 0.5,
    quad_n: int | None = None,
) -> SpectralVector:
    """Coefficients c_n = <f, phi_n> for n <= n_max, by Gauss quadrature.

    ``sigma`` is f's Gaussian envelope rate (default 1/2, the rate of
    the basis functions themselves).  The Parseval defect
    ||f||^2 - sum |c_n|^2 is recorded on the result; it measures how
    much of f lives above index n_max.
    """
    value = as_mu(mu).require_numeric()
    if not sigma > 0:
        raise ValueError("expand needs a Gaussian envelope rate sigma > 0")
    if quad_n is None:
        quad_n = max(2 * (n_max + 1), n_max + 32)
    if quad_n < n_max + 8:
        raise ValueError("quadrature size too small for the requested n_max")
    rule = gauss_hermite_mu(value, quad_n)
    s = math.sqrt(sigma + 0.5)
    t = rule.nodes / s
    # f(t) e^(sigma t^2) recovers the polynomial-growth part; the exponent
    # sigma t^2 = sigma u^2 / (sigma + 1/2) stays below the node's u^2.
    gvals = np.asarray(f(t)) * np.exp(sigma * t * t)
    table = phi_poly_table(value, n_max, t)
    coeffs = s ** (-2.0 * value - 1.0) * (table * (rule.weights * gvals)).sum(axis=1)
    norm_sq = l2mu_norm(f, sigma=sigma, mu=value, quad_n=quad_n) ** 2
    defect = float(norm_sq - np.sum(np.abs(coeffs) ** 2))
    return SpectralVector(mu=value, coeffs=coeffs, parseval_defect=defect)


def synthesize(vec: SpectralVector, x):
    """Pointwise sum c_n phi_n(x)."""
    scalar = np.isscalar(x)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    table = phi_poly_table(vec.mu, len(vec) - 1, xa)
    vals = (vec.coeffs[:, None] * table).sum(axis=0) * np.exp(-0.5 * xa * xa)
    if scalar:
        return complex(vals[0]) if np.iscomplexobj(vals) else float(vals[0])
    return vals


def l2mu_norm(f, *, sigma: float, mu, quad_n: int = 96) -> float:
    """Weighted L^2 norm of f, which must decay like e^(-sigma x^2)."""
    value = as_mu(mu).require_numeric()
    if not sigma > 0:
        raise ValueError("l2mu_norm needs a Gaussian envelope rate sigma > 0")
    rule = gauss_hermite_mu(value, quad_n)
    s = math.sqrt(2.0 * sigma)
    t = rule.nodes / s
    gvals = np.abs(np.asarray(f(t))) ** 2 * np.exp(2.0 * sigma * t * t)
    return math.sqrt(s ** (-2.0 * value - 1.0) * float(np.dot(rule.weights, gvals)))


def fourier_eigenvalue_pair(n: int, re, im):
    """(-i)^n * (re + i im) as an exact (re, im) pair; field-generic."""
    k = n % 4
    if k == 0:
        return re, im
    if k == 1:
        return im, -re
    if k == 2:
        return -re, -im
    return -im, re


def fourier_spectral(vec: SpectralVector) -> SpectralVector:
    """The transform on coefficients: c_n -> (-i)^n c_n.  Exact."""
    n = np.arange(len(vec))
    return SpectralVector(
        mu=vec.mu,
        coeffs=vec.coeffs.astype(complex) * (-1j) ** n,
        parseval_defect=vec.parseval_defect,
    )


def _kernel_matrix(value: float, x: np.ndarray, t: np.ndarray, options) -> np.ndarray:
    """e(-i x_a t_i; mu) as a matrix, choosing a route that stays accurate.

    The power series for imaginary arguments carries absolute error
    ~eps * e^|z|, harmless while |z| <= 30.  Beyond that, mu = 0 is
    exactly exp(-ixt) and mu > 0 has the bounded averaging-measure form
    e(-iz) = sum_j v_j exp(-i z tau_j) with tau_j in (-1, 1).
    """
    z = np.outer(x, t)
    big = float(np.max(np.abs(z), initial=0.0))
    if value == 0.0:
        return np.exp(-1j * z)
    if big <= 30.0 or value < 0.0:
        return e_mu(value, -1j * z, options)
    inner = gauss_alpha_mu(value, 192)
    return np.exp(-1j * z[..., None] * inner.nodes) @ inner.weights


def fourier_quadrature(
    mu,
    f,
    x,
    *,
    sigma: float,
    quad_n: int = 96,
    inverse: bool = False,
    options: EvalOptions | None = None,
):
    """Transform of f at x (scalar or ndarray) by direct quadrature.

    ``sigma`` is f's Gaussian envelope rate and must be supplied: the
    substitution t -> t / sqrt(sigma) maps the integral onto the fixed
    e^(-t^2) rule.  ``inverse`` flips the kernel to e(+ixt; mu), which
    realizes the inverse (conjugate) transform.  Returns complex values.
    """
    value = as_mu(mu).require_numeric()
    if sigma is None or not sigma > 0:
        raise ValueError("fourier_quadrature needs a Gaussian envelope rate sigma > 0")
    scalar = np.isscalar(x)
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    rule = gauss_hermite_mu(value, quad_n)
    s = math.sqrt(sigma)
    t = rule.nodes / s
    kernel = _kernel_matrix(value, -xa if inverse else xa, t, options)
    gvals = np.asarray(f(t)) * np.exp(t * t * sigma)
    pref = s ** (-2.0 * value - 1.0) / (2.0 ** (value + 0.5) * gamma_half(value))
    vals = pref * (kernel @ (rule.weights * gvals))
    return complex(vals[0]) if scalar else vals


# Closed forms of the transform on Gaussian-type inputs.  Each returns the
# transform value (prefactor included) so it is directly comparable with
# fourier_quadrature on the matching input.

_PREF = lambda value: 1.0 / (2.0 ** (value + 0.5) * gamma_half(value))  # noqa: E731


def transform_of_gaussian(mu, lam: float, x):
    """Transform of e^(-lam t^2):  pref * Gamma(mu+1/2) lam^(-mu-1/2) e^(-x^2/(4 lam))."""
    value = as_mu(mu).require_numeric()
    if not lam > 0:
        raise ValueError("the Gaussian rate lam must be positive")
    x = np.asarray(x, dtype=float)
    return _PREF(value) * gamma_half(value) * lam ** (-value - 0.5) * np.exp(-x * x / (4.0 * lam))


def transform_of_monomial_gaussian(mu, n: int, lam: float, x):
    """Transform of t^n e^(-lam t^2):

    pref * (-i/2)^n Gamma(mu+1/2) lam^(-(n+1)/2-mu) (gamma_mu(n)/n!)
         * e^(-x^2/(4 lam)) H_n(x / (2 sqrt(lam)); mu).
    """
    value = as_mu(mu).require_numeric()
    if not lam > 0:
        raise ValueError("the Gaussian rate lam must be positive")
    x = np.asarray(x, dtype=float)
    amp = (
        _PREF(value)
        * gamma_half(value)
        * lam ** (-0.5 * n - 0.5 - value)
        * gamma_mu(value, n)
        / math.factorial(n)
        / 2.0**n
    )
    return (-1j) ** n * amp * np.exp(-x * x / (4.0 * lam)) * hermite_eval(
        value, n, x / (2.0 * math.sqrt(lam))
    )


def transform_of_efun_gaussian(mu, lam: float, y: float, x, options: EvalOptions | None = None):
    """Transform of e(iyt; mu) e^(-lam t^2):

    pref * Gamma(mu+1/2) lam^(-mu-1/2) e^(-(x^2+y^2)/(4 lam)) e(xy/(2 lam); mu).
    """
    value = as_mu(mu).require_numeric()
    if not lam > 0:
        raise ValueError("the Gaussian rate lam must be positive")
    x = np.asarray(x, dtype=float)
    amp = _PREF(value) * gamma_half(value) * lam ** (-value - 0.5)
    return amp * np.exp(-(x * x + y * y) / (4.0 * lam)) * e_mu(
        value, x * y / (2.0 * lam), options
    )


def transform_of_hermite_gaussian(mu, n: int, beta: float, lam: float, x):
    """Transform of H_n(beta t; mu) e^(-lam^2 t^2), valid for beta^2 > lam^2 > 0:

    pref * (-i)^n Gamma(mu+1/2) lam^(-2 mu - 1) ((beta/lam)^2 - 1)^(n/2)
         * e^(-x^2/(4 lam^2)) H_n(beta x / (2 lam sqrt(beta^2 - lam^2)); mu).

    At beta = 1, lam^2 = 1/2 this reduces to (-i)^n e^(-x^2/2) H_n(x; mu):
    the eigenfunction relation.
    """
    value = as_mu(mu).require_numeric()
    if not (beta * beta > lam * lam > 0):
        raise ValueError("needs beta^2 > lam^2 > 0")
    x = np.asarray(x, dtype=float)
    ratio2 = (beta / lam) ** 2 - 1.0
    amp = _PREF(value) * gamma_half(value) * lam ** (-2.0 * value - 1.0) * ratio2 ** (0.5 * n)
    arg = beta * x / (2.0 * lam * math.sqrt(beta * beta - lam * lam))
    return (-1j) ** n * amp * np.exp(-x * x / (4.0 * lam * lam)) * hermite_eval(value, n, arg)


def operator_matrix(mu, kind: str, size: int) -> OperatorMatrix:
    """Truncated matrix of one canonical operator on the phi basis.

    kinds: 'A' (lowering), 'Adag' (raising), 'Q' (position), 'P'
    (momentum), 'H' (hamiltonian, diagonal n + mu + 1/2), 'J' (parity,
    diagonal (-1)^n), 'F' (transform, diagonal (-i)^n).
    """
    value = as_mu(mu).require_numeric()
    if size < 2:
        raise ValueError("operator matrices need size >= 2")
    n = np.arange(1, size)
    # A phi_n = sqrt(gamma(n)/gamma(n-1)) phi_{n-1} = sqrt(n + 2 mu theta(n)) phi_{n-1}
    lower = np.sqrt(n + 2.0 * value * (n % 2))
    if kind == "A":
        m = np.diag(lower, k=1).astype(complex)
    elif kind == "Adag":
        m = np.diag(lower, k=-1).astype(complex)
    elif kind == "Q":
        m = ((np.diag(lower, k=1) + np.diag(lower, k=-1)) / math.sqrt(2.0)).astype(complex)
    elif kind == "P":
        m = (np.diag(lower, k=1) - np.diag(lower, k=-1)).astype(complex) / (1j * math.sqrt(2.0))
    elif kind == "H":
        m = np.diag(np.arange(size) + value + 0.5).astype(complex)
    elif kind == "J":
        m = np.diag((-1.0) ** np.arange(size)).astype(complex)
    elif kind == "F":
        m = np.diag((-1j) ** np.arange(size))
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    return OperatorMatrix(kind=kind, mu=value, matrix=m)
