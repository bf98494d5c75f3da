"""Deformed Hermite polynomials and the reflection-corrected derivative.

The family H_n(x; mu) is orthogonal for the weight |x|^(2 mu) e^(-x^2) and
is given explicitly by

    H_n(x; mu) = n! sum_{k <= n/2} (-1)^k (2 x)^(n-2k) / (k! gamma_mu(n-2k)).

The derivative that makes the family behave classically is the
reflection-corrected operator

    (D p)(x) = p'(x) + mu (p(x) - p(-x)) / x,

which on monomials acts as x^n -> (gamma_mu(n)/gamma_mu(n-1)) x^(n-1).
Two implementations of D are kept on purpose: the monomial rule (fast
path) and the derivative-plus-reflection definition (independent route
used by the exact verifier).

All constructors here are field-generic: with a rational mu and
``exact=True`` they emit Fraction coefficients, otherwise float64.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import as_mu, gamma_mu, gamma_mu_exact, gamma_table, mu_binomial, mu_binomial_exact, theta
from .poly import BivariatePoly, DensePoly

__all__ = [
    "hermite_coeffs",
    "hermite_eval",
    "dunkl_apply",
    "dunkl_definition",
    "raise_apply",
    "inversion_weights",
    "inversion_expand",
    "binomial_poly",
    "heat_poly",
]


def _factorials(n: int, exact: bool):
    out = [Fraction(1) if exact else 1.0]
    for k in range(1, n + 1):
        out.append(out[-1] * k)
    return out


def hermite_coeffs(mu, n: int, *, exact: bool = False) -> DensePoly:
    """Coefficient vector of H_n(x; mu) from the explicit sum."""
    if n < 0:
        raise ValueError("polynomial degree must be nonnegative")
    param = as_mu(mu)
    fact = _factorials(n, exact)
    if exact:
        frac = param.require_exact()
        gam = [gamma_mu_exact(frac, m) for m in range(n + 1)]
        two = Fraction(2)
    else:
        param.require_numeric()
        gam = gamma_table(param.value, n).values
        two = 2.0
    coeffs = [0 * two] * (n + 1)
    sign = 1
    for k in range(n // 2 + 1):
        m = n - 2 * k
        coeffs[m] = sign * fact[n] * two**m / (fact[k] * gam[m])
        sign = -sign
    return DensePoly.from_coeffs(coeffs)


def hermite_eval(mu, n: int, x):
    """Evaluate H_n(x; mu) by the three-term recursion; x may be an ndarray.

    H_{n+1} = (n+1)/(n+1+2 mu theta(n+1)) * (2 x H_n - 2 n H_{n-1}).
    """
    if n < 0:
        raise ValueError("polynomial degree must be nonnegative")
    value = as_mu(mu).require_numeric()
    x = np.asarray(x, dtype=float) if isinstance(x, (list, tuple, np.ndarray)) else x
    h_prev = x * 0 + 1.0 if isinstance(x, np.ndarray) else 1.0
    if n == 0:
        return h_prev
    h_cur = 2.0 * x / (1.0 + 2.0 * value)
    for k in range(1, n):
        step = k + 1 + 2.0 * value * theta(k + 1)
        h_next = (k + 1) / step * (2.0 * x * h_cur - 2.0 * k * h_prev)
        h_prev, h_cur = h_cur, h_next
    return h_cur


def _mu_like(mu, p: DensePoly):
    """mu in the same field as p's coefficients."""
    param = as_mu(mu)
    if any(isinstance(c, Fraction) for c in p.coeffs):
        return param.require_exact()
    return param.require_numeric()


def dunkl_apply(mu, p: DensePoly) -> DensePoly:
    """Reflection-corrected derivative via the monomial rule.

    x^k -> (k + 2 mu theta(k)) x^(k-1), extended linearly.
    """
    if p.is_zero():
        return p
    m = _mu_like(mu, p)
    out = [0] * max(p.degree, 0)
    for k, c in enumerate(p.coeffs):
        if k == 0 or c == 0:
            continue
        out[k - 1] = c * (k + 2 * m * theta(k))
    return DensePoly.from_coeffs(out)


def dunkl_definition(mu, p: DensePoly) -> DensePoly:
    """Same operator from its definition: p'(x) + mu (p(x) - p(-x)) / x.

    The reflection difference kills even monomials, so the division by x
    is exact on polynomials.  Kept as an independent route for the exact
    verifier; agrees with dunkl_apply identically.
    """
    if p.is_zero():
        return p
    m = _mu_like(mu, p)
    diff_over_x = [0] * max(p.degree, 0)
    for k, c in enumerate(p.coeffs):
        if k % 2 == 1 and c != 0:
            diff_over_x[k - 1] = 2 * c
    return p.derivative() + DensePoly.from_coeffs(diff_over_x).scale(m)


def raise_apply(mu, p: DensePoly) -> DensePoly:
    """Raising operator 2 x p - (D p); sends H_n to a positive multiple of H_{n+1}."""
    return p.shift_up(1).scale(2) - dunkl_apply(mu, p)


def inversion_weights(n: int, *, exact: bool = False) -> list:
    """Weights c_k with (2x)^n / gamma_mu(n) = sum_k c_k H_{n-2k}(x; mu).

    c_k = 1 / (k! (n-2k)!), independent of mu.
    """
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    fact = _factorials(n, exact)
    one = Fraction(1) if exact else 1.0
    return [one / (fact[k] * fact[n - 2 * k]) for k in range(n // 2 + 1)]


def inversion_expand(mu, n: int, *, exact: bool = False) -> DensePoly:
    """Reassemble (2x)^n / gamma_mu(n) from the Hermite family."""
    weights = inversion_weights(n, exact=exact)
    acc = DensePoly.zero()
    for k, w in enumerate(weights):
        acc = acc + hermite_coeffs(mu, n - 2 * k, exact=exact).scale(w)
    return acc


def binomial_poly(mu, n: int, *, exact: bool = False) -> BivariatePoly:
    """Deformed binomial polynomial p_n(x, y) = sum_j binom_mu(n, j) x^j y^(n-j).

    p_n(x, y) is what the generalized translation does to x^n.
    """
    if n < 0:
        raise ValueError("polynomial degree must be nonnegative")
    param = as_mu(mu)
    d = {}
    for j in range(n + 1):
        if exact:
            d[(j, n - j)] = mu_binomial_exact(param.require_exact(), n, j)
        else:
            d[(j, n - j)] = mu_binomial(param.require_numeric(), n, j)
    return BivariatePoly.from_dict(d)


def heat_poly(mu, n: int, t, *, exact: bool = False) -> DensePoly:
    """Heat-flow image of x^n after time t under d/dt = D^2:

    gamma_mu(n) sum_k x^(n-2k) t^k / (k! gamma_mu(n-2k)).

    At mu = 0 these are the classical heat polynomials (x^2 + 2t, ...).
    """
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    param = as_mu(mu)
    fact = _factorials(n, exact)
    if exact:
        frac = param.require_exact()
        gam = [gamma_mu_exact(frac, m) for m in range(n + 1)]
        t = Fraction(t)
    else:
        param.require_numeric()
        gam = gamma_table(param.value, n).values
        t = float(t)
    coeffs = [0 * gam[0]] * (n + 1)
    tk = t**0
    for k in range(n // 2 + 1):
        m = n - 2 * k
        coeffs[m] = gam[n] * tk / (fact[k] * gam[m])
        tk = tk * t
    return DensePoly.from_coeffs(coeffs)
