"""Named identity checks, grouped into suites.

Each check compares two independent computational routes and reports the
worst error observed together with the tolerance it must meet.  The CLI
`verify` subcommand runs these; the pytest acceptance module asserts them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Callable, Iterable

import numpy as np

from . import analysis, heat, lacunary, numbers, polynomials, umbral
from .quadrature import QuadratureSpec, integrate

__all__ = ["CheckResult", "SUITES", "available_checks", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    measured: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.measured <= self.tolerance


_REGISTRY: list[tuple[str, str, float, Callable[[float], tuple[float, str]]]] = []


def _check(name: str, suite: str, tolerance: float):
    def wrap(fn: Callable[[], tuple[float, str]]):
        _REGISTRY.append((name, suite, tolerance, fn))
        return fn

    return wrap


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1.0)


# ---------------------------------------------------------------------------
# umbral suite (Hermite numbers and the algebra built on them)
# ---------------------------------------------------------------------------

@_check("number_sequences_exact", "umbral", 0.0)
def _number_sequences():
    expected = {
        (2, (1, 0, 2, 0, 12, 0, 120)),
        (3, (1, 0, 0, 6, 0, 0, 360, 0, 0, 60480)),
    }
    bad = 0
    for m, seq in expected:
        got = tuple(numbers.hermite_number(m, r) for r in range(len(seq)))
        bad += got != seq
    order4 = {4: 24, 8: 20160, 12: 79833600}
    for r, value in order4.items():
        bad += numbers.hermite_number(4, r) != value
    return float(bad), "order 2/3 listings and order-4 entries, exact integers"


@_check("number_defining_identity", "umbral", 0.0)
def _number_identity():
    bad = 0
    for m in (2, 3, 4, 5):
        for k in range(13):
            h = numbers.hermite_number(m, k * m)
            bad += h * math.factorial(k) != math.factorial(k * m)
    return float(bad), "h(m, km) * k! == (km)! exactly"


@_check("table_reproducibility", "umbral", 0.0)
def _table_repro():
    bad = 0
    for m in (2, 3, 4, 7):
        table = numbers.build_table(m, 40)
        bad += any(
            table.values[r] != numbers.hermite_number(m, r) for r in range(41)
        )
    return float(bad), "build_table matches hermite_number entrywise"


@_check("fractional_integer_consistency", "umbral", 1e-12)
def _fractional_consistency():
    worst = 0.0
    for r in range(21):
        exact = float(numbers.hermite_number(2, r))
        via_gamma = numbers.hermite_number_fractional(2, r)
        worst = max(worst, abs(via_gamma - exact) / max(exact, 1.0))
    return worst, "gamma route vs exact route at integer index, r <= 20"


def _newton_binomial_worst(m: int) -> float:
    rng = np.random.default_rng(20260810 + m)
    u = umbral.UmbraId(m)
    worst = 0.0
    for _ in range(100):
        x, y = (float(v) for v in rng.uniform(-2, 2, 2))
        n = int(rng.integers(0, 17))
        root = complex(y) ** (1.0 / m)
        p = (umbral.UmbralPoly.constant(x) + umbral.monomial(u, 2, root)) ** n
        val = umbral.project(p)
        ref = polynomials.hermite_m(m, n, x, y)
        worst = max(worst, _rel(val.real, ref), abs(val.imag) / max(abs(ref), 1.0))
    return worst


for _m in (2, 3, 4):
    @_check(f"newton_binomial_m{_m}", "umbral", 1e-11)
    def _newton(m=_m):
        return _newton_binomial_worst(m), "projected binomial vs direct sum, n <= 16, 100 points"


@_check("multinomial_vs_three_var", "umbral", 1e-11)
def _multinomial():
    rng = np.random.default_rng(2026)
    worst = 0.0
    for _ in range(200):
        x = float(rng.uniform(-2, 2))
        y = float(rng.uniform(0, 2))
        z = float(rng.uniform(-2, 2))
        n = int(rng.integers(0, 13))
        worst = max(
            worst,
            _rel(
                polynomials.multinomial_expansion(n, x, y, z),
                polynomials.hermite3_3var(n, x, y, z),
            ),
        )
    return worst, "combinatorial route vs nested-sum route, n <= 12"


@_check("projection_linearity", "umbral", 1e-13)
def _linearity():
    rng = np.random.default_rng(7)
    u2, u3 = umbral.UmbraId(2), umbral.UmbraId(3)
    worst = 0.0
    for _ in range(50):
        a = sum(
            (umbral.monomial(u2, int(h), complex(*rng.uniform(-1, 1, 2))) for h in rng.integers(0, 9, 4)),
            umbral.UmbralPoly.constant(0.0),
        )
        b = sum(
            (umbral.monomial(u3, int(h), complex(*rng.uniform(-1, 1, 2))) for h in rng.integers(0, 9, 4)),
            umbral.UmbralPoly.constant(0.0),
        )
        al, be = (complex(*rng.uniform(-1, 1, 2)) for _ in range(2))
        lhs = umbral.project(al * a + be * b)
        rhs = al * umbral.project(a) + be * umbral.project(b)
        scale = max(abs(lhs), abs(rhs), 1.0)
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst, "project(alpha a + beta b) vs alpha project(a) + beta project(b)"


@_check("independent_vacua_factorize", "umbral", 1e-13)
def _vacua():
    rng = np.random.default_rng(11)
    u2, u3 = umbral.UmbraId(2), umbral.UmbraId(3)
    worst = 0.0
    for _ in range(50):
        a = umbral.UmbralPoly.constant(float(rng.uniform(-1, 1)))
        for h in rng.integers(1, 7, 3):
            a = a + umbral.monomial(u2, 2 * int(h), float(rng.uniform(-1, 1)))
        b = umbral.UmbralPoly.constant(float(rng.uniform(-1, 1)))
        for h in rng.integers(1, 7, 3):
            b = b + umbral.monomial(u3, 2 * int(h), float(rng.uniform(-1, 1)))
        lhs = umbral.project(a * b)
        rhs = umbral.project(a) * umbral.project(b)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))
    return worst, "project(a b) vs project(a) project(b), disjoint umbrae"


@_check("umbral_gaussian_series", "umbral", 1e-13)
def _gaussian_series():
    u = umbral.UmbraId(2)
    worst = 0.0
    for x in np.linspace(-2.0, 2.0, 17):
        p = umbral.monomial(u, 2, complex(0.0, float(x)))
        series = umbral.umbral_exp(p, 60)
        val = umbral.project(series)
        # bound: magnitude of the last retained projected term plus rounding
        last = abs(umbral.project(p**60)) / math.factorial(60)
        err = abs(val - math.exp(-float(x) ** 2))
        worst = max(worst, err - last)
    return worst, "exp(i u x) projects onto exp(-x^2) within the last-term bound"


# ---------------------------------------------------------------------------
# series suite
# ---------------------------------------------------------------------------

@_check("erf_series_vs_quadrature", "series", 1e-10)
def _erf_check():
    def erf_quad(x: float) -> float:
        if x == 0.0:
            return 0.0
        lo, hi = (0.0, x) if x > 0 else (x, 0.0)
        q = integrate(lambda u: math.exp(-u * u), QuadratureSpec.finite(lo, hi))
        return math.copysign(2.0 / math.sqrt(math.pi) * q.require_converged(), x)

    worst = 0.0
    for x in np.linspace(-2.0, 2.0, 41):
        worst = max(worst, abs(analysis.erf_series(float(x), 60).value - erf_quad(float(x))))
    return worst, "Hermite-number series vs quadrature erf on |x| <= 2, N = 60"


@_check("dgauss_series_vs_poly", "series", 1e-9)
def _dgauss_check():
    worst = 0.0
    for n in range(7):
        for x in np.linspace(-1.5, 1.5, 13):
            s = polynomials.dseries(n, float(x), 80, +1)
            worst = max(worst, _rel(s.value, polynomials.dgauss_poly(n, float(x))))
    return worst, "derivative series vs H_n(2x,1) exp(x^2), n <= 6"


@_check("dcubic_series_vs_poly", "series", 1e-8)
def _dcubic_check():
    worst = 0.0
    for n in range(6):
        for x in (-1.0, -0.5, 0.25, 0.8, 1.2):
            s = polynomials.dseries(n, x, 90, -1)
            worst = max(worst, _rel(s.value, polynomials.dcubic_poly(n, x)))
    return worst, "order-3 derivative series vs polynomial closed form, n <= 5"


_GABOR_SIGNAL = analysis.GaussianSignal(rate=32.0 * math.pi)


@_check("gabor_series_vs_direct", "series", 1e-6)
def _gabor_check():
    worst = 0.0
    for tau in (0.0, 0.5, 1.0):
        for omega in (0.0, 0.5, 1.0):
            d = analysis.gabor_direct(_GABOR_SIGNAL, tau, omega)
            s = analysis.gabor_series(_GABOR_SIGNAL, tau, omega, 40)
            worst = max(worst, abs(d - s.value))
    return worst, "Hermite expansion vs direct quadrature, Gaussian signal, N = 40"


@_check("gabor_series_monotone", "series", 0.0)
def _gabor_monotone():
    d = analysis.gabor_direct(_GABOR_SIGNAL, 0.5, 1.0)
    errs = [abs(d - analysis.gabor_series(_GABOR_SIGNAL, 0.5, 1.0, n).value) for n in (10, 20, 40)]
    ok = errs[2] < errs[1] < errs[0]
    return 0.0 if ok else 1.0, f"errors at N=10,20,40: {errs[0]:.1e}, {errs[1]:.1e}, {errs[2]:.1e}"


# ---------------------------------------------------------------------------
# integrals suite
# ---------------------------------------------------------------------------

@_check("gamma_reflection_duplication", "integrals", 1e-13)
def _gamma_identities():
    worst = 0.0
    for x in (0.1, 0.3, 0.45, 0.7, 1.3, 2.6):
        lhs = analysis.gamma(x) * analysis.gamma(1.0 - x)
        rhs = math.pi / math.sin(math.pi * x)
        worst = max(worst, _rel(lhs, rhs))
    for x in (0.25, 0.8, 1.7, 3.2, 6.5):
        lhs = analysis.gamma(2.0 * x)
        rhs = analysis.gamma(x) * analysis.gamma(x + 0.5) * 2.0 ** (2.0 * x - 1.0) / math.sqrt(math.pi)
        worst = max(worst, _rel(lhs, rhs))
    return worst, "reflection and duplication identities"


@_check("gaussian_integral_formula", "integrals", 1e-12)
def _gaussian_formula():
    worst = 0.0
    for a, b in ((1.0, 0.0), (2.0, 1.0), (0.5, -1.2)):
        quad = integrate(
            lambda x: math.exp(-a * x * x + b * x), QuadratureSpec.real_line()
        ).require_converged()
        closed = math.sqrt(math.pi / a) * math.exp(b * b / (4.0 * a))
        worst = max(worst, _rel(quad, closed))
    return worst, "int exp(-a x^2 + b x) vs sqrt(pi/a) exp(b^2/4a)"


@_check("mellin_gaussian_identity", "integrals", 1e-8)
def _mellin_check():
    worst = 0.0
    for nu in (0.5, 1.0, 2.0, 3.0, 4.5):
        quad, closed, _ = analysis.mellin_gaussian(nu)
        worst = max(worst, abs(quad - closed) / abs(closed))
    return worst, "half-line Gaussian moment vs Gamma(nu/2)/2 at nu in {0.5,1,2,3,4.5}"


@_check("quartic_gaussian_identity", "integrals", 1e-8)
def _quartic_check():
    quad, closed = analysis.quartic_gaussian()
    return abs(quad - closed) / closed, "int exp(-x^4) vs Gamma(1/4)/2"


@_check("super_gaussian_identity", "integrals", 1e-6)
def _super_gaussian_check():
    worst = 0.0
    for alpha in (0.0, 1.0, 2.0, 3.0):
        quad, closed = analysis.super_gaussian_integral(alpha)
        worst = max(worst, abs(quad - closed) / abs(closed))
    return worst, "projected integrand quadrature vs sqrt(pi) exp((alpha/2)^4)"


@_check("airy_at_zero", "integrals", 1e-10)
def _airy_zero():
    closed = 3.0 ** (-2.0 / 3.0) / analysis.gamma(2.0 / 3.0)
    return abs(analysis.airy(0.0) - closed), "Ai(0) vs 3^(-2/3)/Gamma(2/3)"


@_check("airy_normalization", "integrals", 1e-7)
def _airy_norm():
    t, w = analysis.airy_kernel_nodes()
    return abs(float(np.sum(w)) - 1.0), "windowed Airy kernel mass vs 1"


@_check("airy_exp_identity", "integrals", 1e-6)
def _airy_exp_check():
    worst = 0.0
    for lam, x in ((1.0 / 3.0, 1.0), (1.0, 0.5), (1.0, 0.0), (0.5, 1.1)):
        rhs, lhs = analysis.airy_exp_identity(lam, x)
        worst = max(worst, abs(rhs - lhs) / max(abs(lhs), 1.0))
    return worst, "int Ai(t) exp(zt) dt vs exp(z^3/3) on the valid domain"


# ---------------------------------------------------------------------------
# heat suite
# ---------------------------------------------------------------------------

def _gaussian_field(grid: heat.Grid) -> heat.Field:
    return heat.Field.from_function(grid, lambda x: np.exp(-(x**2)))


@_check("heat2_closed_form", "heat", 1e-8)
def _heat2_check():
    grid = heat.Grid(-20.0, 20.0, 2048)
    g = _gaussian_field(grid)
    x = grid.nodes()
    worst = 0.0
    for y in (0.25, 1.0):
        F = heat.evolve_spectral(g, heat.EvolutionSpec(m=2, y=y))
        exact = (1.0 + 4.0 * y) ** -0.5 * np.exp(-(x**2) / (1.0 + 4.0 * y))
        worst = max(worst, float(np.max(np.abs(F.values - exact))))
    return worst, "order-2 spectral vs Gauss kernel closed form, grid [-20,20] n=2048"


@_check("heat3_route_agreement", "heat", 1e-4)
def _heat3_check():
    worst = 0.0
    for y, half_span, n in ((0.1, 20.0, 2048), (0.5, 60.0, 4096), (1.0, 120.0, 8192)):
        grid = heat.Grid(-half_span, half_span, n)
        g = _gaussian_field(grid)
        Fa = heat.evolve_airy(g, y)
        Fs = heat.evolve_spectral(g, heat.EvolutionSpec(m=3, y=y))
        worst = max(worst, float(np.max(np.abs(Fa.values - Fs.values))))
    return worst, "spectral vs Airy-kernel route at y in {0.1, 0.5, 1}"


@_check("heat_semigroup", "heat", 1e-10)
def _semigroup_check():
    grid = heat.Grid(-20.0, 20.0, 1024)
    g = _gaussian_field(grid)
    worst = 0.0
    for m, y1, y2, sign in ((2, 0.3, 0.7, 1), (3, 0.4, 0.6, 1), (4, 0.2, 0.5, -1)):
        two = heat.evolve_spectral(
            heat.evolve_spectral(g, heat.EvolutionSpec(m, y1, sign)),
            heat.EvolutionSpec(m, y2, sign),
        )
        one = heat.evolve_spectral(g, heat.EvolutionSpec(m, y1 + y2, sign))
        scale = float(np.max(np.abs(one.values)))
        worst = max(worst, float(np.max(np.abs(two.values - one.values))) / scale)
    return worst, "two-step vs one-step evolution, well-posed directions"


@_check("heat_mean_preservation", "heat", 1e-8)
def _mean_check():
    grid = heat.Grid(-20.0, 20.0, 2048)
    g = _gaussian_field(grid)
    worst = 0.0
    for m, y in ((2, 0.5), (3, 0.8), (5, 0.3)):
        F = heat.evolve_spectral(g, heat.EvolutionSpec(m, y))
        worst = max(worst, abs(F.mean() - g.mean()))
    for y in (1e-6, 0.1):
        F = heat.evolve_airy(g, y)
        worst = max(worst, abs(F.mean() - g.mean()))
    return worst, "grid mean before vs after evolution (both routes)"


@_check("heat_polynomial_property", "heat", 1e-4)
def _heat_poly_check():
    # finite-difference steps balancing stencil truncation against rounding
    steps = {2: 1e-4, 3: 1e-3, 4: 3e-3}
    stencils = {
        2: ((1.0, -1), (-2.0, 0), (1.0, 1)),
        3: ((-0.5, -2), (1.0, -1), (-1.0, 1), (0.5, 2)),
        4: ((1.0, -2), (-4.0, -1), (6.0, 0), (-4.0, 1), (1.0, 2)),
    }
    hy = 1e-5
    worst = 0.0
    for m in (2, 3, 4):
        h = steps[m]
        for n in range(9):
            for x in (-1.5, -0.4, 0.7, 1.8):
                for y in (-0.8, 0.3, 1.2):
                    dy = (
                        polynomials.hermite_m(m, n, x, y + hy)
                        - polynomials.hermite_m(m, n, x, y - hy)
                    ) / (2.0 * hy)
                    dxm = (
                        math.fsum(
                            c * polynomials.hermite_m(m, n, x + k * h, y)
                            for c, k in stencils[m]
                        )
                        / h**m
                    )
                    worst = max(worst, abs(dy - dxm) / max(1.0, abs(dy), abs(dxm)))
    return worst, "d/dy H vs m-th x-difference, m in {2,3,4}, n <= 8"


@_check("heat_monomial_consistency", "heat", 1e-6)
def _monomial_check():
    grid = heat.Grid(-16.0, 16.0, 2048)
    x = grid.nodes()
    window = np.exp(-((x / 10.0) ** 16))
    worst = 0.0
    for m, y in ((2, 0.01), (3, 1e-3)):
        for n in range(7):
            g = heat.Field(grid, window * x**n)
            F = heat.evolve_spectral(g, heat.EvolutionSpec(m, y))
            interior = np.abs(x) <= 2.0
            exact = np.array([heat.evolve_monomial(m, n, float(xi), y) for xi in x[interior]])
            worst = max(
                worst,
                float(np.max(np.abs(F.values[interior] - exact) / np.maximum(1.0, np.abs(exact)))),
            )
    return worst, "windowed monomial under spectral route vs heat polynomial, interior"


@_check("gw_quartic_polynomial", "heat", 1e-12)
def _gw_poly_check():
    F = heat.evolve_gw_quartic(heat.PolynomialData((0.0, 0.0, 0.0, 0.0, 1.0)), y=0.3)
    worst = 0.0
    for x in (-1.5, 0.0, 2.0):
        worst = max(worst, _rel(F(x), polynomials.hermite_m(4, 4, x, 0.3)))
    identity = heat.evolve_gw_quartic(heat.PolynomialData((0.0, 1.0)), y=5.0)
    worst = max(worst, abs(identity(2.5) - 2.5))
    return worst, "moment transform of x^4 vs heat polynomial x^4 + 24y"


@_check("gw_quartic_vs_spectral", "heat", 1e-5)
def _gw_gaussian_check():
    y = 1e-7
    grid = heat.Grid(-20.0, 20.0, 2048)
    g = _gaussian_field(grid)
    Fs = heat.evolve_spectral(g, heat.EvolutionSpec(m=4, y=y, sign=-1))
    solution = heat.evolve_gw_quartic(heat.GaussianData(rate=1.0), y=-y)
    xs = grid.nodes()
    sel = np.abs(xs) <= 3.0
    vals = np.array([solution(float(v)) for v in xs[sel]])
    return (
        float(np.max(np.abs(vals - Fs.values[sel].real))),
        "Gaussian data, dissipative direction, |y| small enough for the moment series",
    )


# ---------------------------------------------------------------------------
# lacunary suite
# ---------------------------------------------------------------------------

_LACUNARY_GRID = {
    "x": tuple(np.linspace(-1.0, 1.0, 5)),
    "y": (-0.2, 0.05, 0.2),
    "t": (-0.08, 0.03, 0.08),
}


@_check("lacunary_three_routes", "lacunary", 1e-8)
def _lacunary_routes():
    worst = 0.0
    for x in _LACUNARY_GRID["x"]:
        for y in _LACUNARY_GRID["y"]:
            for t in _LACUNARY_GRID["t"]:
                d = lacunary.lacunary_direct(float(x), y, t, 56)
                f = lacunary.lacunary_factored(float(x), y, t, 85)
                u = lacunary.lacunary_umbral(float(x), y, t, min(d.terms_used - 1, 52))
                denom = max(abs(d.value), 1.0)
                worst = max(worst, abs(d.value - f.value) / denom, abs(d.value - u.value) / denom)
    return worst, "direct vs factored vs umbral on a 5x3x3 grid inside |t|,|y| <= 0.2"


@_check("lacunary_figure2_params", "lacunary", 1e-6)
def _lacunary_fig2():
    worst = 0.0
    for x in np.linspace(-1.0, 1.0, 101):
        d = lacunary.lacunary_direct(float(x), -0.2, -0.1, 56)
        f = lacunary.lacunary_factored(float(x), -0.2, -0.1, 85)
        worst = max(worst, abs(d.value - f.value))
    return worst, "pointwise |direct - factored| at y = -0.2, t = -0.1"


@_check("lacunary_term_identity", "lacunary", 1e-10)
def _lacunary_terms():
    worst = 0.0
    x, y = 0.8, -0.15
    u = umbral.UmbraId(2)
    base = umbral.UmbralPoly.constant(x) + umbral.monomial(u, 2, cmath.sqrt(complex(y)))
    for r in range(7):
        coeff = umbral.project(base ** (3 * r))
        ref = polynomials.hermite2(3 * r, x, y)
        worst = max(worst, _rel(coeff.real, ref), abs(coeff.imag) / max(abs(ref), 1.0))
    return worst, "r! [t^r] umbral route vs H_{3r}(x, y), r <= 6"


@_check("lacunary_smallest_term_growth", "lacunary", 0.0)
def _lacunary_growth():
    worst = 0.0
    for t in (0.05, 0.02, -0.04):
        used = lacunary.lacunary_direct(0.9, 0.15, t, 56).terms_used
        worst = max(worst, float(10 - used))
    return max(worst, 0.0), "optimal truncation index at least 10 for |t| <= 0.05"


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------

SUITES = ("integrals", "series", "umbral", "heat", "lacunary")


def available_checks(suite: str = "all") -> list[str]:
    return [name for name, s, _, _ in _REGISTRY if suite in ("all", s)]


def run_suite(suite: str = "all", tol_override: float | None = None) -> list[CheckResult]:
    """Run every check in the suite; returns one result per check."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    results = []
    for name, s, tolerance, fn in _REGISTRY:
        if suite not in ("all", s):
            continue
        measured, detail = fn()
        tol = tolerance if tol_override is None else tol_override
        results.append(CheckResult(name=name, suite=s, measured=measured, tolerance=tol, detail=detail))
    return results
