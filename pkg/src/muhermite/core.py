"""Deformation parameter and the generalized factorial.

Everything in this package is parametrized by a real deformation
parameter mu.  The reference measure on the line is |x|^(2 mu) e^(-x^2) dx,
which requires mu > -1/2 for integrability.  The combinatorial backbone is
the generalized factorial

    gamma_mu(0) = 1,
    gamma_mu(n + 1) = (n + 1 + 2 mu theta(n + 1)) gamma_mu(n),

where theta(n) is 1 for odd n and 0 for even n.  At mu = 0 this collapses
to n!.  The recursion denominators vanish exactly when 2 mu is a negative
odd integer, so exact-rational work is allowed for any rational mu away
from those poles, while floating-point work keeps the mu > -1/2 guard.

gamma_mu grows like n! 2^n, overflowing float64 near n ~ 170; callers that
need large n use the log-scale accessor instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "MuParam",
    "GammaMuTable",
    "as_mu",
    "theta",
    "gamma_mu",
    "gamma_mu_exact",
    "gamma_table",
    "log_gamma_mu",
    "mu_binomial",
    "mu_binomial_exact",
    "alpha_mu_moment",
    "gamma_half",
    "beta_function",
]


def theta(n: int) -> int:
    """Parity indicator: 1 for odd n, 0 for even n."""
    if n < 0:
        raise ValueError("theta expects a nonnegative index")
    return n & 1


def _is_pole(mu: Fraction) -> bool:
    # Poles of the recursion: 2 mu an odd negative integer (-1/2, -3/2, ...).
    twice = 2 * mu
    return twice.denominator == 1 and twice.numerator < 0 and twice.numerator % 2 != 0


@dataclass(frozen=True)
class MuParam:
    """Deformation parameter with an optional exact rational representation.

    ``value`` is always set and drives the floating-point layer.  ``exact``
    is attached only when the parameter was given as an int, Fraction, or
    "p/q" string; it is what routes work through the exact rational layer.
    """

    value: float
    exact: Fraction | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError("mu must be finite")
        if self.exact is not None and _is_pole(self.exact):
            raise ValueError(f"mu = {self.exact} is a pole of the factorial recursion")

    def require_numeric(self) -> float:
        if not self.value > -0.5:
            raise ValueError("mu must exceed -1/2")
        return self.value

    def require_positive(self) -> float:
        if not self.value > 0.0:
            raise ValueError("mu must be positive")
        return self.value

    def require_exact(self) -> Fraction:
        if self.exact is None:
            raise ValueError(
                "exact arithmetic needs mu as int, Fraction, or 'p/q' string"
            )
        return self.exact

    @staticmethod
    def parse(text: str) -> "MuParam":
        """Parse CLI-style mu: '0.5' stays numeric-only, '1/3' is exact."""
        text = text.strip()
        if "/" in text:
            frac = Fraction(text)
            return MuParam(value=float(frac), exact=frac)
        if text.lstrip("+-").isdigit():
            frac = Fraction(int(text))
            return MuParam(value=float(frac), exact=frac)
        return MuParam(value=float(text))


def as_mu(mu) -> MuParam:
    """Normalize any accepted mu spelling to a MuParam."""
    if isinstance(mu, MuParam):
        return mu
    if isinstance(mu, Fraction):
        return MuParam(value=float(mu), exact=mu)
    if isinstance(mu, int):
        return MuParam(value=float(mu), exact=Fraction(mu))
    if isinstance(mu, str):
        return MuParam.parse(mu)
    if isinstance(mu, float):
        return MuParam(value=mu)
    raise TypeError(f"cannot interpret {mu!r} as a deformation parameter")


@dataclass(frozen=True)
class GammaMuTable:
    """Cached generalized factorial values gamma_mu(0..n) for one mu.

    ``values[n]`` overflows to inf once n is large enough (~170); the
    parallel ``log_values`` stay finite and are the supported accessor
    in that regime.
    """

    mu: float
    values: np.ndarray
    log_values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _gamma_table_cached(mu: float, size: int) -> GammaMuTable:
    values = np.empty(size + 1)
    logs = np.empty(size + 1)
    values[0] = 1.0
    logs[0] = 0.0
    with np.errstate(over="ignore"):
        for n in range(size):
            step = n + 1 + 2.0 * mu * theta(n + 1)
            values[n + 1] = values[n] * step
            logs[n + 1] = logs[n] + math.log(step)
    values.setflags(write=False)
    logs.setflags(write=False)
    return GammaMuTable(mu=mu, values=values, log_values=logs)


def gamma_table(mu, n_max: int) -> GammaMuTable:
    value = as_mu(mu).require_numeric()
    # Grow in power-of-two buckets so repeated queries share one table.
    size = 64
    while size < n_max:
        size *= 2
    return _gamma_table_cached(value, size)


def gamma_mu(mu, n: int) -> float:
    """Generalized factorial gamma_mu(n), floating point."""
    if n < 0:
        raise ValueError("gamma_mu expects n >= 0")
    return float(gamma_table(mu, n).values[n])


def log_gamma_mu(mu, n: int) -> float:
    """log gamma_mu(n); finite far beyond the overflow point of gamma_mu."""
    if n < 0:
        raise ValueError("log_gamma_mu expects n >= 0")
    return float(gamma_table(mu, n).log_values[n])


@lru_cache(maxsize=None)
def _gamma_exact_cached(mu: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= k + 1 + 2 * mu * theta(k + 1)
    return out


def gamma_mu_exact(mu, n: int) -> Fraction:
    """Generalized factorial as an exact rational; mu must be rational."""
    if n < 0:
        raise ValueError("gamma_mu_exact expects n >= 0")
    frac = as_mu(mu).require_exact()
    return _gamma_exact_cached(frac, n)


def mu_binomial(mu, n: int, j: int) -> float:
    """Deformed binomial coefficient gamma_mu(n) / (gamma_mu(j) gamma_mu(n-j))."""
    if not 0 <= j <= n:
        raise ValueError("mu_binomial needs 0 <= j <= n")
    table = gamma_table(mu, n)
    # Log-space ratio: safe well past the overflow point of the raw values.
    return math.exp(
        table.log_values[n] - table.log_values[j] - table.log_values[n - j]
    )


def mu_binomial_exact(mu, n: int, j: int) -> Fraction:
    if not 0 <= j <= n:
        raise ValueError("mu_binomial needs 0 <= j <= n")
    return gamma_mu_exact(mu, n) / (gamma_mu_exact(mu, j) * gamma_mu_exact(mu, n - j))


def alpha_mu_moment(mu, n: int) -> float:
    """n-th moment of the reference averaging measure on (-1, 1): n!/gamma_mu(n).

    Only defined for mu > 0, where that measure exists.
    """
    value = as_mu(mu).require_positive()
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    return math.exp(math.lgamma(n + 1) - log_gamma_mu(value, n))


def gamma_half(mu) -> float:
    """Gamma(mu + 1/2), the total mass of |x|^(2 mu) e^(-x^2) dx."""
    return math.gamma(as_mu(mu).require_numeric() + 0.5)


def beta_function(a: float, b: float) -> float:
    """Euler Beta via log-Gamma; a, b > 0."""
    if a <= 0 or b <= 0:
        raise ValueError("beta_function needs positive arguments")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
