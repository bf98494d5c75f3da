"""Gauss rules for the deformed measures.

Two families are exposed:

* ``gauss_hermite_mu``: nodes/weights for |x|^(2 mu) e^(-x^2) dx on the
  line.  The monic orthogonal recursion for this weight has zero
  diagonal and off-diagonal coefficients b_k = (k + 2 mu theta(k)) / 2,
  so nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix
  with off-diagonals sqrt(b_k) and weights are Gamma(mu + 1/2) times the
  squared first eigenvector components.

* ``gauss_alpha_mu``: the probability measure on (-1, 1) with density
  (1 - t)^(mu - 1) (1 + t)^mu / B(1/2, mu), mu > 0, which is the
  averaging measure behind the generalized translation.  This is a
  Jacobi weight; its n-th moment is n! / gamma_mu(n).

The symmetric tridiagonal eigenproblem is solved in-repo by an
implicit-shift QL iteration that carries only the first eigenvector
component (all the Gauss weight needs), keeping the module free of any
external linear-algebra dependency and cheap at the sizes used here
(N <= 256).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import as_mu, beta_function, gamma_half, theta

__all__ = ["QuadratureRule", "gauss_hermite_mu", "gauss_alpha_mu", "jacobi_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes, weights, and provenance of one Gauss rule."""

    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int
    measure: str
    mass: float

    def __post_init__(self) -> None:
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        return float(np.dot(self.weights, f(self.nodes)))

    def integrate_values(self, values: np.ndarray):
        return np.dot(self.weights, values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("node,weight\n")
        for x, w in zip(self.nodes, self.weights):
            buf.write(f"{x:.17g},{w:.17g}\n")
        return buf.getvalue()


def _tridiag_eigen_first(diag: np.ndarray, off: np.ndarray):
    """Eigenvalues (ascending) and first eigenvector components of a
    symmetric tridiagonal matrix, by implicit-shift QL with the rotation
    chain applied to the first identity row only.
    """
    d = np.array(diag, dtype=float)
    n = d.size
    e = np.zeros(n)
    e[: n - 1] = off
    z = np.zeros(n)
    z[0] = 1.0
    eps = np.finfo(float).eps
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > 50:
                raise RuntimeError("tridiagonal QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    order = np.argsort(d, kind="stable")
    return d[order], z[order]


@lru_cache(maxsize=None)
def _hermite_rule_cached(mu: float, n: int) -> QuadratureRule:
    ks = np.arange(1, n, dtype=float)
    off = np.sqrt((ks + 2.0 * mu * (ks % 2)) / 2.0)
    nodes, first = _tridiag_eigen_first(np.zeros(n), off)
    mass = gamma_half(mu)
    weights = mass * first**2
    # The spectrum is symmetric; rounding breaks the symmetry at ~1 ulp,
    # so fold the rule onto its mirror image.
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule(nodes, weights, 2 * n - 1, "hermite_mu", mass)


def gauss_hermite_mu(mu, n: int) -> QuadratureRule:
    """Gauss rule for |x|^(2 mu) e^(-x^2) dx, exact through degree 2n - 1."""
    value = as_mu(mu).require_numeric()
    if n < 1:
        raise ValueError("a quadrature rule needs at least one node")
    if n > 256:
        raise ValueError("rule size capped at 256 nodes")
    return _hermite_rule_cached(value, n)


def _jacobi_coefficients(a: float, b: float, n: int):
    """Monic recursion coefficients for the weight (1-t)^a (1+t)^b on (-1, 1)."""
    alpha = np.empty(n)
    beta = np.empty(n)
    s = a + b
    alpha[0] = (b - a) / (s + 2.0)
    beta[0] = 2.0 ** (s + 1.0) * beta_function(a + 1.0, b + 1.0)
    if n > 1:
        # n = 1 uses the cancelled form, which stays finite at s = -1.
        alpha[1] = (b * b - a * a) / ((2.0 + s) * (4.0 + s))
        beta[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) ** 2 * (3.0 + s))
    for k in range(2, n):
        t = 2.0 * k + s
        alpha[k] = (b * b - a * a) / (t * (t + 2.0))
        beta[k] = 4.0 * k * (k + a) * (k + b) * (k + s) / (t * t * (t + 1.0) * (t - 1.0))
    return alpha, beta


@lru_cache(maxsize=None)
def _jacobi_rule_cached(a: float, b: float, n: int, normalized: bool) -> QuadratureRule:
    alpha, beta = _jacobi_coefficients(a, b, n)
    nodes, first = _tridiag_eigen_first(alpha, np.sqrt(beta[1:n]))
    mass = 1.0 if normalized else beta[0]
    weights = mass * first**2
    name = "alpha_mu" if normalized else "jacobi"
    return QuadratureRule(nodes, weights, 2 * n - 1, name, mass)


def jacobi_rule(a: float, b: float, n: int) -> QuadratureRule:
    """Gauss rule for (1-t)^a (1+t)^b dt on (-1, 1); a, b > -1."""
    if a <= -1.0 or b <= -1.0:
        raise ValueError("Jacobi exponents must exceed -1")
    if n < 1:
        raise ValueError("a quadrature rule needs at least one node")
    if n > 256:
        raise ValueError("rule size capped at 256 nodes")
    return _jacobi_rule_cached(float(a), float(b), n, False)


def gauss_alpha_mu(mu, n: int) -> QuadratureRule:
    """Gauss rule for the unit-mass averaging measure on (-1, 1), mu > 0."""
    value = as_mu(mu).require_positive()
    if n < 1:
        raise ValueError("a quadrature rule needs at least one node")
    if n > 256:
        raise ValueError("rule size capped at 256 nodes")
    return _jacobi_rule_cached(value - 1.0, value, n, True)
