"""The acceptance suite: ten numbered, self-contained criteria.

Each criterion function rebuilds whatever oracles it needs (closed
forms, independent recursions, quadrature rules) and returns a result
record with a one-line human summary.  The CLI `verify` subcommand and
the acceptance tests print exactly one line per criterion, so a failure
names the criterion and its worst measured defect rather than a bare
assert.  Everything runs at desk scale, well under a minute total.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import oscillator as osc
from .core import as_mu, gamma_half, gamma_mu, gamma_mu_exact
from .efun import e_mu, mehler_rhs
from .exact import IDENTITY_TAGS, verify_identity
from .heat import (
    heat_apply_kernel,
    heat_gaussian,
    heat_gaussian_params,
    heat_odd_gaussian,
    heat_on_monomial,
    heat_pde_residual,
    heat_spectral_matrix,
)
from .hermite import hermite_coeffs, hermite_eval
from .poly import DensePoly
from .quadrature import gauss_alpha_mu, gauss_hermite_mu
from .translate import (
    translate_alpha,
    translate_gaussian_closed,
    translate_odd_gaussian_closed,
    translate_xi,
)
from .transform import (
    SpectralVector,
    expand,
    fourier_quadrature,
    l2mu_norm,
    operator_matrix,
    phi_poly_table,
    synthesize,
    transform_of_efun_gaussian,
    transform_of_gaussian,
    transform_of_hermite_gaussian,
    transform_of_monomial_gaussian,
)

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_acceptance"]

EXACT_MUS = (
    Fraction(0),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(5, 2),
    Fraction(-1, 4),
    Fraction(7, 2),
)
SERIES_TAGS = ("generating_function",)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    @property
    def label(self) -> str:
        return f"criterion_{self.number:02d}"

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.label} {self.name}: {self.detail} [{self.seconds:.2f}s]"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _finish(number: int, name: str, passed: bool, detail: str, started: float) -> CriterionResult:
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - started)


def _rel_sup(got, want) -> float:
    got = np.asarray(got)
    want = np.asarray(want)
    scale = float(np.max(np.abs(want)))
    return float(np.max(np.abs(got - want))) / max(scale, 1e-300)


def criterion_exact_identities() -> CriterionResult:
    started = time.perf_counter()
    checks = 0
    failures = []
    for tag in IDENTITY_TAGS:
        n_max = 12 if tag in SERIES_TAGS else 20
        for mu in EXACT_MUS:
            report = verify_identity(tag, mu, n_max)
            checks += report.checks
            if not report.passed:
                failures.append(f"{tag}@mu={mu}")
    detail = f"12 tags x 6 mu, {checks} degree checks, exact rational equality"
    if failures:
        detail += "; FAILED " + ", ".join(failures)
    return _finish(1, "exact_identities", not failures, detail, started)


def criterion_quadrature_exactness() -> CriterionResult:
    started = time.perf_counter()
    worst_h = 0.0
    for mu in (0.0, 0.5, 1.5, -0.25):
        rule = gauss_hermite_mu(mu, 32)
        mass = gamma_half(mu)
        for d in range(64):
            got = float(np.dot(rule.weights, rule.nodes**d))
            if d % 2:
                # Closed value is zero by symmetry; measure the roundoff
                # cancellation against the absolute-moment scale.
                worst_h = max(worst_h, abs(got) / math.gamma(mu + 0.5 * (d + 1)))
            else:
                r = d // 2
                want = mass * gamma_mu(mu, d) / (4.0**r * math.factorial(r))
                worst_h = max(worst_h, abs(got - want) / want)
    worst_a = 0.0
    for mu in (0.3, 0.75, 2.0):
        rule = gauss_alpha_mu(mu, 48)
        for n in range(26):
            got = float(np.dot(rule.weights, rule.nodes**n))
            want = math.factorial(n) / gamma_mu(mu, n)
            worst_a = max(worst_a, abs(got - want) / abs(want))
    passed = worst_h <= 1e-12 and worst_a <= 1e-11
    detail = f"monomials d<=63 rel defect {worst_h:.2e} (tol 1e-12); moment rel defect {worst_a:.2e} (tol 1e-11)"
    return _finish(2, "quadrature_exactness", passed, detail, started)


def criterion_orthonormality() -> CriterionResult:
    started = time.perf_counter()
    worst = 0.0
    for mu in (0.0, 0.5, 1.5, -0.25):
        rule = gauss_hermite_mu(mu, 32)
        table = phi_poly_table(mu, 20, rule.nodes)
        gram = (table * rule.weights) @ table.T
        worst = max(worst, float(np.max(np.abs(gram - np.eye(21)))))
    detail = f"Gram defect {worst:.2e} for n<=20, four mu values (tol 1e-10)"
    return _finish(3, "orthonormality", worst < 1e-10, detail, started)


def criterion_fourier_eigenfunctions() -> CriterionResult:
    started = time.perf_counter()
    x = np.linspace(-3.0, 3.0, 20)
    worst = 0.0
    for mu in (0.0, 0.5, 1.5):
        for n in range(11):
            f = lambda t, mu=mu, n=n: np.exp(-0.5 * t * t) * hermite_eval(mu, n, t)
            got = fourier_quadrature(mu, f, x, sigma=0.5)
            want = (-1j) ** n * f(x)
            worst = max(worst, _rel_sup(got, want))
    detail = f"eigenfunction defect {worst:.2e} for n<=10 at 20 points (tol 1e-8)"
    return _finish(4, "fourier_eigenfunctions", worst < 1e-8, detail, started)


def criterion_transform_closed_forms() -> CriterionResult:
    started = time.perf_counter()
    x = np.linspace(-2.5, 2.5, 15)
    worst = 0.0
    for mu in (0.0, 0.5, 1.5):
        for lam in (0.4, 1.0, 1.7):
            f = lambda t, lam=lam: np.exp(-lam * t * t)
            got = fourier_quadrature(mu, f, x, sigma=lam)
            worst = max(worst, _rel_sup(got, transform_of_gaussian(mu, lam, x)))
        for n in (1, 2, 3, 4):
            for lam in (0.6, 1.2):
                f = lambda t, n=n, lam=lam: t**n * np.exp(-lam * t * t)
                got = fourier_quadrature(mu, f, x, sigma=lam)
                worst = max(worst, _rel_sup(got, transform_of_monomial_gaussian(mu, n, lam, x)))
        for y in (0.7, 1.3):
            for lam in (0.5, 1.0):
                f = lambda t, y=y, lam=lam: e_mu(mu, 1j * y * t) * np.exp(-lam * t * t)
                got = fourier_quadrature(mu, f, x, sigma=lam)
                worst = max(worst, _rel_sup(got, transform_of_efun_gaussian(mu, lam, y, x)))
        for n in (0, 1, 2, 3):
            beta, lam = 1.3, 0.8
            f = lambda t, n=n: hermite_eval(mu, n, beta * t) * np.exp(-lam * lam * t * t)
            got = fourier_quadrature(mu, f, x, sigma=lam * lam)
            worst = max(worst, _rel_sup(got, transform_of_hermite_gaussian(mu, n, beta, lam, x)))
    worst_eig = 0.0
    for mu in (0.0, 0.5, 1.5):
        for n in range(6):
            reduced = transform_of_hermite_gaussian(mu, n, 1.0, math.sqrt(0.5), x)
            eig = (-1j) ** n * np.exp(-0.5 * x * x) * hermite_eval(mu, n, x)
            worst_eig = max(worst_eig, _rel_sup(reduced, eig))
    passed = worst < 1e-9 and worst_eig < 1e-9
    detail = f"closed-form defect {worst:.2e} (tol 1e-9); unit-rate reduction defect {worst_eig:.2e}"
    return _finish(5, "transform_closed_forms", passed, detail, started)


def criterion_bilinear_kernel() -> CriterionResult:
    """Bilinear eigenfunction sum against its closed form, 40 terms.

    The 40-term budget and the 1e-9 tolerance are both part of the
    stated criterion.  At z = 0.6 the truncation tail of the series is
    itself above 1e-9 for the positive deformation values (near the
    origin the eigenfunctions grow like n^(mu/2 - 1/4), so the tail is
    ~ z^40 n^mu); the criterion is then not attainable by any correct
    implementation.  The converged comparison (80 terms) is reported
    alongside so the identity itself is still machine-checked.
    """
    started = time.perf_counter()
    rng = np.random.default_rng(42)
    xs = rng.uniform(-2.0, 2.0, 25)
    ys = rng.uniform(-2.0, 2.0, 25)
    worst = 0.0
    worst_converged = 0.0
    for mu in (0.0, 0.6, 1.5):
        tx = phi_poly_table(mu, 79, xs)
        ty = phi_poly_table(mu, 79, ys)
        envelope = np.exp(-0.5 * (xs * xs + ys * ys))
        for z in (0.2, 0.4, 0.6):
            powers = z ** np.arange(80)
            series = envelope * ((powers[:40, None] * tx[:40] * ty[:40])).sum(axis=0)
            full = envelope * (powers[:, None] * tx * ty).sum(axis=0)
            closed = np.array([mehler_rhs(mu, float(a), float(b), z) for a, b in zip(xs, ys)])
            worst = max(worst, float(np.max(np.abs(series - closed))))
            worst_converged = max(worst_converged, float(np.max(np.abs(full - closed))))
    detail = (
        f"40-term defect {worst:.2e} (tol 1e-9, truncation tail dominates at z=0.6); "
        f"80-term defect {worst_converged:.2e}"
    )
    return _finish(6, "bilinear_kernel", worst < 1e-9, detail, started)


def criterion_heat_consistency() -> CriterionResult:
    started = time.perf_counter()
    grid = np.linspace(-2.5, 2.5, 41)
    size = 96
    worst_routes = 0.0
    for mu in (0.0, 0.5, 1.5):
        flows = {t: heat_spectral_matrix(mu, t, size) for t in (0.1, 0.5, 2.0)}
        for alpha in (0.6, 1.0):
            even = lambda u, alpha=alpha: np.exp(-alpha * u * u)
            odd = lambda u, alpha=alpha: u * np.exp(-alpha * u * u)
            even_c = expand(mu, even, size - 1, sigma=alpha)
            odd_c = expand(mu, odd, size - 1, sigma=alpha)
            for t, flow in flows.items():
                closed = heat_gaussian(mu, alpha, 0.0, t, grid).real
                kernel = heat_apply_kernel(mu, even, t, grid)
                spectral = synthesize(SpectralVector(mu, flow @ np.asarray(even_c.coeffs)), grid).real
                worst_routes = max(worst_routes, float(np.max(np.abs(closed - kernel))))
                worst_routes = max(worst_routes, float(np.max(np.abs(closed - spectral))))
                closed_o = heat_odd_gaussian(mu, alpha, t, grid)
                kernel_o = heat_apply_kernel(mu, odd, t, grid)
                spectral_o = synthesize(SpectralVector(mu, flow @ np.asarray(odd_c.coeffs)), grid).real
                worst_routes = max(worst_routes, float(np.max(np.abs(closed_o - kernel_o))))
                worst_routes = max(worst_routes, float(np.max(np.abs(closed_o - spectral_o))))
    worst_comp = 0.0
    for mu in (0.0, 0.5, 1.5):
        for t1, t2 in ((0.1, 0.4), (0.5, 1.5)):
            p1, a1, z1 = heat_gaussian_params(mu, 0.7, 0.3, t1)
            p2, a2, z2 = heat_gaussian_params(mu, a1, z1, t2)
            pd, ad, zd = heat_gaussian_params(mu, 0.7, 0.3, t1 + t2)
            worst_comp = max(
                worst_comp,
                abs(p1 * p2 - pd) / abs(pd),
                abs(a2 - ad),
                abs(z2 - zd),
            )
    worst_pde = 0.0
    for mu in (0.0, 0.5, 1.5):
        for family in ("even", "odd"):
            for t in (0.1, 0.5, 2.0):
                for xv in (-2.5, -1.5, -0.7, 0.3, 0.7, 1.5, 2.5):
                    worst_pde = max(worst_pde, heat_pde_residual(mu, family, t, xv, h=1e-4))
    passed = worst_routes < 1e-6 and worst_comp < 1e-10 and worst_pde < 1e-6
    detail = (
        f"route spread {worst_routes:.2e} (tol 1e-6); composition {worst_comp:.2e} (tol 1e-10); "
        f"pde residual {worst_pde:.2e} (tol 1e-6)"
    )
    return _finish(7, "heat_consistency", passed, detail, started)


def _translation_pairs() -> list:
    rng = np.random.default_rng(42)
    mags = rng.uniform(0.3, 2.2, (20, 2))
    pairs = []
    for i, (a, b) in enumerate(mags):
        if i % 2:
            pairs.append((float(a), -float(b)))
        else:
            pairs.append((float(a), float(b)))
    return pairs


def criterion_translation() -> CriterionResult:
    started = time.perf_counter()
    pairs = _translation_pairs()
    worst_routes = 0.0
    worst_closed = 0.0
    worst_sym = 0.0
    for mu in (0.3, 0.75, 2.0):
        for lam in (0.5, 1.1):
            phi = lambda u, lam=lam: np.exp(-lam * u * u)
            phi_odd = lambda u, lam=lam: u * np.exp(-lam * u * u)
            for x, y in pairs:
                via_alpha = translate_alpha(mu, phi, x, y)
                via_xi = translate_xi(mu, phi, x, y)
                worst_routes = max(worst_routes, abs(via_alpha - via_xi))
                closed = translate_gaussian_closed(mu, lam, x, y)
                worst_closed = max(worst_closed, abs(via_alpha - closed))
                odd_alpha = translate_alpha(mu, phi_odd, x, y)
                odd_closed = translate_odd_gaussian_closed(mu, lam, x, y)
                worst_closed = max(worst_closed, abs(odd_alpha - odd_closed))
                swapped = translate_alpha(mu, phi, y, x)
                worst_sym = max(worst_sym, abs(via_alpha - swapped))
    contraction_ok = True
    worst_ratio = 0.0
    for mu in (0.3, 0.75, 2.0):
        for lam in (0.5, 1.1):
            base = l2mu_norm(lambda u: np.exp(-lam * u * u), sigma=lam, mu=mu)
            for y in (0.1, 1.0, 3.0):
                moved = l2mu_norm(
                    lambda u: translate_gaussian_closed(mu, lam, u, y), sigma=lam, mu=mu
                )
                worst_ratio = max(worst_ratio, moved / base)
                if moved > base * (1.0 + 1e-12):
                    contraction_ok = False
    witness_phi = lambda u: (u - 1.0) ** 2 * np.exp(-u * u / 8.0)
    witness = float(translate_alpha(2.0, witness_phi, 1.0, 1.0))
    witness_ok = witness < -1e-3
    passed = worst_routes < 1e-9 and worst_closed < 1e-9 and worst_sym < 1e-9 and contraction_ok and witness_ok
    detail = (
        f"route agreement {worst_routes:.2e}, closed forms {worst_closed:.2e}, symmetry {worst_sym:.2e} "
        f"(tol 1e-9); contraction ratio <= {worst_ratio:.6f}; negativity witness {witness:.4f}"
    )
    return _finish(8, "translation", passed, detail, started)


def criterion_oscillator() -> CriterionResult:
    started = time.perf_counter()
    worst_algebra = 0.0
    worst_bridge = 0.0
    all_pass = True
    for mu in (0.0, 0.5, 1.5):
        rep = osc.build(mu, 32)
        for report in osc.run_all(rep):
            if report.name == "representation":
                worst_bridge = max(worst_bridge, report.max_defect)
            else:
                worst_algebra = max(worst_algebra, report.max_defect)
            all_pass = all_pass and report.passed
    passed = all_pass and worst_algebra < 1e-10 and worst_bridge < 1e-8
    detail = (
        f"interior word-identity defect {worst_algebra:.2e} (tol 1e-10); "
        f"representation bridge {worst_bridge:.2e} (tol 1e-8) at N=32"
    )
    return _finish(9, "oscillator", passed, detail, started)


def _classical_hermite(n: int) -> DensePoly:
    prev = DensePoly.from_coeffs((Fraction(1),))
    if n == 0:
        return prev
    cur = DensePoly.from_coeffs((Fraction(0), Fraction(2)))
    for k in range(1, n):
        nxt = cur.shift_up(1).scale(Fraction(2)) - prev.scale(Fraction(2 * k))
        prev, cur = cur, nxt
    return cur


def criterion_classical_reduction() -> CriterionResult:
    started = time.perf_counter()
    notes = []
    coeff_ok = all(
        hermite_coeffs(Fraction(0), n, exact=True) == _classical_hermite(n) for n in range(21)
    )
    notes.append("coefficients exact" if coeff_ok else "COEFFICIENT MISMATCH")
    gamma_ok = all(gamma_mu_exact(Fraction(0), n) == math.factorial(n) for n in range(21))
    notes.append("factorials exact" if gamma_ok else "GAMMA MISMATCH")
    diag = np.diag(operator_matrix(0.0, "H", 16).matrix).real
    eig_ok = bool(np.all(diag == np.arange(16) + 0.5))
    notes.append("eigenvalues n+1/2" if eig_ok else "EIGENVALUE MISMATCH")
    report = osc.check_commutation(osc.build(0.0, 16))
    canonical = [e for e in report.entries if e.tag == "canonical_commutator"]
    comm_defect = canonical[0].interior if canonical else math.inf
    comm_ok = comm_defect < 1e-12
    notes.append(f"canonical commutator defect {comm_defect:.1e}")
    zs = (0.3, -1.7, 2.0 + 1.5j, -0.4j)
    efun_defect = max(abs(e_mu(0.0, z) - np.exp(z)) / abs(np.exp(z)) for z in zs)
    efun_ok = efun_defect < 1e-13
    notes.append(f"exponential defect {efun_defect:.1e}")
    t = Fraction(1, 3)
    flowed = heat_on_monomial(Fraction(0), 4, t, exact=True)
    classic = DensePoly.from_coeffs((12 * t * t, Fraction(0), 12 * t, Fraction(0), Fraction(1)))
    heat_ok = flowed == classic
    notes.append("heat flow classical" if heat_ok else "HEAT MISMATCH")
    xs = np.linspace(-2.0, 2.0, 9)
    ft = transform_of_gaussian(0.0, 0.5, xs)
    ft_ok = _rel_sup(ft, np.exp(-0.5 * xs * xs)) < 1e-14
    notes.append("unit Gaussian fixed")
    passed = coeff_ok and gamma_ok and eig_ok and comm_ok and efun_ok and heat_ok and ft_ok
    return _finish(10, "classical_reduction", passed, "; ".join(notes), started)


CRITERIA = (
    criterion_exact_identities,
    criterion_quadrature_exactness,
    criterion_orthonormality,
    criterion_fourier_eigenfunctions,
    criterion_transform_closed_forms,
    criterion_bilinear_kernel,
    criterion_heat_consistency,
    criterion_translation,
    criterion_oscillator,
    criterion_classical_reduction,
)


def run_criterion(number: int) -> CriterionResult:
    if not 1 <= number <= len(CRITERIA):
        raise ValueError(f"criterion number must be 1..{len(CRITERIA)}")
    return CRITERIA[number - 1]()


def run_acceptance(numbers=None) -> list:
    """Run the numbered criteria (all by default), in order."""
    if numbers is None:
        numbers = range(1, len(CRITERIA) + 1)
    return [run_criterion(n) for n in numbers]
