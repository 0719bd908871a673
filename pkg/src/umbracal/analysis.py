"""Integral and series identities: Mellin-Gaussian and quartic-Gaussian
integrals, the projected super-Gaussian integrand and its closed form, the
Hermite-number error-function series, the Airy-exponential identity, and
the windowed Fourier (Gabor) transform with its Hermite expansion.

Every identity is computed by two independent routes (quadrature vs closed
form, or series vs quadrature) so the verification suite can compare them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .numbers import hermite_number
from .polynomials import hermite2
from .quadrature import QuadratureResult, QuadratureSpec, Scheme, integrate
from .series import SeriesResult
from .special import AIRY_ENVELOPE, _airy_unchecked, airy, gamma, lgamma

__all__ = [
    "GaussianSignal",
    "SampledSignal",
    "Signal",
    "SeriesResult",
    "QuadratureSpec",
    "QuadratureResult",
    "Scheme",
    "integrate",
    "airy",
    "gamma",
    "mellin_gaussian",
    "quartic_gaussian",
    "super_gaussian_integrand",
    "super_gaussian_integral",
    "SUPER_GAUSSIAN_ALPHA_MAX",
    "erf_series",
    "airy_exp_identity",
    "gabor_direct",
    "gabor_series",
    "airy_kernel_nodes",
]

_SQRT_PI = math.sqrt(math.pi)

#: series practicality bound for the projected super-Gaussian integral
SUPER_GAUSSIAN_ALPHA_MAX = 3.5

# |cos(r pi / 4)| on the integer lattice (exact zeros, no float cosine)
_ABS_COS_QUARTER = (1.0, math.sqrt(2.0) / 2.0, 0.0, math.sqrt(2.0) / 2.0) * 2


# ---------------------------------------------------------------------------
# signals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianSignal:
    """Analytic descriptor x(t) = amplitude * exp(-rate (t - center)^2)."""

    amplitude: float = 1.0
    rate: float = 1.0
    center: float = 0.0

    def __post_init__(self) -> None:
        if self.rate <= 0:
            raise ValueError("rate must be > 0")

    def __call__(self, t: float) -> float:
        return self.amplitude * math.exp(-self.rate * (t - self.center) ** 2)

    def moment(self, n: int, tau: float) -> float:
        """Exact integral of x(t) (t - tau)^n dt.

        Binomial moments of a Gaussian assemble into a two-variable Hermite
        polynomial: amplitude sqrt(pi/rate) H_n(center - tau, 1/(4 rate)).
        """
        return (
            self.amplitude
            * math.sqrt(math.pi / self.rate)
            * hermite2(n, self.center - tau, 1.0 / (4.0 * self.rate))
        )


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled signal on t = t_start + i * dt, i = 0..len-1."""

    t_start: float
    dt: float
    values: tuple[complex, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise ValueError("sampled signal needs at least 2 nodes")
        if self.dt <= 0:
            raise ValueError("sample spacing must be > 0")

    def times(self) -> np.ndarray:
        return self.t_start + self.dt * np.arange(len(self.values))

    def moment(self, n: int, tau: float) -> complex:
        """Trapezoidal x(t) (t - tau)^n dt over the sample support."""
        t = self.times()
        vals = np.asarray(self.values) * (t - tau) ** n
        return complex(np.trapezoid(vals, dx=self.dt))


Signal = GaussianSignal | SampledSignal


# ---------------------------------------------------------------------------
# gamma-route integral identities
# ---------------------------------------------------------------------------

def mellin_gaussian(nu: float) -> tuple[float, float, float]:
    """Mellin-type Gaussian integral against its gamma closed form.

    Returns (quadrature of int_0^inf exp(-x^2) x^(nu-1) dx, Gamma(nu/2)/2,
    absolute difference).
    """
    if nu <= 0:
        raise ValueError("nu must be > 0")

    def integrand(x: float) -> float:
        x2 = x * x
        return math.exp(-x2) * x ** (nu - 1.0) if x2 < 700.0 else 0.0

    quad = integrate(integrand, QuadratureSpec.half_line(target_tol=1e-11)).require_converged()
    closed = 0.5 * gamma(nu / 2.0)
    return quad, closed, abs(quad - closed)


def quartic_gaussian() -> tuple[float, float]:
    """Integral of exp(-x^4) over the real line vs Gamma(1/4)/2."""

    def integrand(x: float) -> float:
        x4 = x * x * x * x
        return math.exp(-x4) if x4 < 700.0 else 0.0

    quad = integrate(integrand, QuadratureSpec.real_line(target_tol=1e-11)).require_converged()
    return quad, 0.5 * gamma(0.25)


# ---------------------------------------------------------------------------
# projected super-Gaussian
# ---------------------------------------------------------------------------

def _super_gaussian_terms(alpha: float, x: float, truncation: int, damping: float):
    """Log-space terms of exp(-damping) sum_r (-alpha x)^r h_{r/2} / r!.

    h at half-integer index expands to Gamma(r/2+1)/Gamma(r/4+1) |cos(r pi/4)|;
    assembling each term in log space keeps huge (alpha x)^r factors finite.
    """
    u = -alpha * x
    if u == 0.0:
        yield 0, math.exp(-damping)
        return
    log_abs_u = math.log(abs(u))
    for r in range(truncation + 1):
        sel = _ABS_COS_QUARTER[r % 8]
        if sel == 0.0:
            continue
        log_mag = (
            r * log_abs_u
            + lgamma(r / 2.0 + 1.0)
            - lgamma(r / 4.0 + 1.0)
            - lgamma(r + 1.0)
            - damping
        )
        sign = -1.0 if (u < 0.0 and r % 2) else 1.0
        yield r, sign * sel * math.exp(log_mag)


def super_gaussian_integrand(alpha: float, x: float, truncation: int) -> SeriesResult:
    """Projected integrand exp(-x^2) sum_r (-alpha x)^r h_{r/2} / r!,
    truncated at index N, with the damping folded into each term so the
    partial sums never overflow."""
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError("truncation must be an integer >= 0")
    terms = []
    last = 0.0
    count = 0
    for r, term in _super_gaussian_terms(alpha, x, truncation, damping=x * x):
        terms.append(term)
        count = r + 1
        if term != 0.0:
            last = abs(term)
    return SeriesResult(value=math.fsum(terms), terms_used=max(count, 1), last_term=last)


def super_gaussian_integral(alpha: float, truncation: int = 250) -> tuple[float, float]:
    """Quadrature of the projected super-Gaussian integrand over the real
    line against the closed form sqrt(pi) exp((alpha/2)^4).

    The agreement of the two values validates the half-integer extension of
    the order-2 Hermite numbers: the odd fractional terms integrate to zero.
    """
    if abs(alpha) > SUPER_GAUSSIAN_ALPHA_MAX:
        raise ValueError(
            f"|alpha| <= {SUPER_GAUSSIAN_ALPHA_MAX} required; the truncated series "
            "overflows its double-precision budget beyond that"
        )

    def series_factor(x: float) -> float:
        # undamped series sum_r (-alpha x)^r h_{r/2} / r!  (Gauss-Hermite
        # supplies the exp(-x^2) weight)
        return math.fsum(t for _, t in _super_gaussian_terms(alpha, x, truncation, damping=0.0))

    quad = integrate(series_factor, QuadratureSpec.hermite(nodes=160, target_tol=1e-9))
    closed = _SQRT_PI * math.exp((alpha / 2.0) ** 4)
    return quad.require_converged(), closed


# ---------------------------------------------------------------------------
# error function series
# ---------------------------------------------------------------------------

def erf_series(x: float, truncation: int) -> SeriesResult:
    """erf(x) as (2x/sqrt(pi)) sum_s h_s (ix)^s / (s+1)!.

    Only even s survive; iterated powers of (ix)^2 keep the imaginary part
    exactly zero, so the result is returned as a real value.
    """
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError("truncation must be an integer >= 0")
    ix2 = complex(0.0, x) * complex(0.0, x)
    power = complex(1.0, 0.0)
    terms: list[complex] = []
    last = 0.0
    for s in range(0, truncation + 1, 2):
        h = hermite_number(2, s)
        term = float(h) * power / math.factorial(s + 1)
        terms.append(term)
        if term != 0:
            last = abs(term)
        power *= ix2
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    value = (2.0 * x / _SQRT_PI) * total
    assert abs(value.imag) <= 1e-14 * max(1.0, abs(value.real))
    return SeriesResult(
        value=value.real,
        terms_used=truncation + 1,
        last_term=abs(2.0 * x / _SQRT_PI) * last,
    )


# ---------------------------------------------------------------------------
# Airy weight nodes and the Airy-exponential identity
# ---------------------------------------------------------------------------

# the oscillatory tail of Ai is rolled off by a smooth window far from the
# region any decayed integrand can reach; the window's tanh ramp keeps the
# truncation bias superalgebraically small (sharp cutoffs leave ~|t|^(-3/4)
# oscillation residue, far too coarse for unit-mass checks), and the ramp
# sits far enough above t_lo that the un-windowed mass below t_lo is ~1e-11
_AIRY_T_LO = -150.0
_AIRY_T_HI = 40.0
_AIRY_WINDOW_CENTER = -100.0
_AIRY_WINDOW_SCALE = 4.0
_AIRY_PANEL = 0.15
_AIRY_GL_ORDER = 12


@lru_cache(maxsize=4)
def airy_kernel_nodes(t_lo: float = _AIRY_T_LO, t_hi: float = _AIRY_T_HI) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature nodes t_j and weights w_j * Ai(t_j) * W(t_j) for integrals
    against the Airy kernel, cached per process.

    Composite Gauss-Legendre panels sized to the local oscillation
    wavelength 2 pi / sqrt(|t|); W is the smooth roll-off window.
    """
    xg, wg = np.polynomial.legendre.leggauss(_AIRY_GL_ORDER)
    edges = [t_lo]
    while edges[-1] < t_hi:
        wavelength = 2.0 * math.pi / math.sqrt(max(1.0, abs(edges[-1])))
        edges.append(min(t_hi, edges[-1] + min(0.6, max(0.12, wavelength / 4.0))))
    edges_arr = np.array(edges)
    mids = 0.5 * (edges_arr[:-1] + edges_arr[1:])
    half = 0.5 * (edges_arr[1:] - edges_arr[:-1])
    t = (mids[:, None] + half[:, None] * xg[None, :]).ravel()
    w = (half[:, None] * wg[None, :]).ravel()
    window = 0.5 * (1.0 + np.tanh((t - _AIRY_WINDOW_CENTER) / _AIRY_WINDOW_SCALE))
    ai = np.array([_airy_unchecked(float(tj)) for tj in t])
    weight = w * ai * window
    keep = np.abs(weight) > 0.0
    return t[keep], weight[keep]


_AIRY_EXP_Z_MAX = 2.5


def airy_exp_identity(lam: float, x: float) -> tuple[float, float]:
    """Airy reduction of a cubic exponential.

    Returns (quadrature of int Ai(t) exp(z t) dt with z = (3 lam)^(1/3) x,
    exp(lam x^3)).  Valid for lam > 0 and 0 <= z <= 2.5; beyond that the
    growing exponential defeats the windowed Airy tail.
    """
    if lam <= 0:
        raise ValueError("lam must be > 0")
    z = (3.0 * lam) ** (1.0 / 3.0) * x
    if z < 0 or z > _AIRY_EXP_Z_MAX:
        raise ValueError(f"z = (3 lam)^(1/3) x = {z:.3f} outside [0, {_AIRY_EXP_Z_MAX}]")
    t, weight = airy_kernel_nodes()
    rhs = float(np.dot(weight, np.exp(z * t)))
    return rhs, math.exp(lam * x**3)


# ---------------------------------------------------------------------------
# Fourier-Gabor transform
# ---------------------------------------------------------------------------

def gabor_direct(sig: Signal, tau: float, omega: float) -> complex:
    """Windowed Fourier transform int x(t) exp(-pi (t-tau)^2 - i omega t) dt
    by direct quadrature (trapezoid over the samples for sampled signals)."""
    if isinstance(sig, SampledSignal):
        t = sig.times()
        weight = np.exp(-math.pi * (t - tau) ** 2 - 1j * omega * t)
        return complex(np.trapezoid(np.asarray(sig.values) * weight, dx=sig.dt))

    def integrand(t: float) -> complex:
        phase = -math.pi * (t - tau) ** 2
        return sig(t) * math.exp(phase) * complex(math.cos(omega * t), -math.sin(omega * t))

    return integrate(integrand, QuadratureSpec.real_line(target_tol=1e-12)).require_converged()


def gabor_series(sig: Signal, tau: float, omega: float, truncation: int) -> SeriesResult:
    """Hermite expansion of the windowed Fourier transform:
    exp(-i omega tau) sum_n (-i)^n H_n(omega, pi)/n! int x(t)(t-tau)^n dt.

    Converges when the signal decays faster than the window (for a Gaussian
    signal, rate > pi); the last_term field makes slow convergence visible.
    """
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError("truncation must be an integer >= 0")
    terms: list[complex] = []
    last = 0.0
    for n in range(truncation + 1):
        moment = sig.moment(n, tau)
        a_n = (-1j) ** n * hermite2(n, omega, math.pi) / math.factorial(n) * moment
        terms.append(a_n)
        if a_n != 0:
            last = abs(a_n)
    total = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    phase = complex(math.cos(omega * tau), -math.sin(omega * tau))
    return SeriesResult(value=phase * total, terms_used=truncation + 1, last_term=last)
