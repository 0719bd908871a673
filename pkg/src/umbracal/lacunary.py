"""Triple-lacunary generating function sum_r t^r H_{3r}(x, y) / r! by three
independent routes: the direct polynomial series, the projected umbral
exponential, and the factored form E(x, y, t) * exp(t x^3).

The series has factorially growing terms, so all routes treat it as an
asymptotic expansion: summation stops at the smallest-magnitude term and
the audit fields report where.  The useful region is narrow, roughly
|t|, |y| <= 0.2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .polynomials import hermite2, hermite3_3var
from .series import SeriesResult
from .umbral import UmbraId, UmbralPoly, monomial, project

__all__ = [
    "LacunaryRoute",
    "LacunaryEval",
    "lacunary_direct",
    "lacunary_umbral",
    "lacunary_factored",
]


class LacunaryRoute(Enum):
    DIRECT = "direct"
    UMBRAL = "umbral"
    FACTORED = "factored"


@dataclass(frozen=True)
class LacunaryEval:
    """One evaluation request: the point, the truncation cap, the route."""

    x: float
    y: float
    t: float
    truncation: int
    route: LacunaryRoute

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise ValueError("truncation must be >= 0")

    def run(self) -> SeriesResult:
        fn = {
            LacunaryRoute.DIRECT: lacunary_direct,
            LacunaryRoute.UMBRAL: lacunary_umbral,
            LacunaryRoute.FACTORED: lacunary_factored,
        }[self.route]
        return fn(self.x, self.y, self.t, self.truncation)


_DIVERGENCE_LOOKAHEAD = 1e4


def _sum_to_smallest_term(term_at) -> tuple[float, int, float]:
    """Sum term_at(0), term_at(1), ... truncated at the globally smallest
    nonzero term magnitude.

    Sign patterns make the magnitudes wobble locally, so a first upturn is
    not trusted: terms are collected until one exceeds the running minimum
    by a divergence factor (or the generator is exhausted), then the sum is
    cut at the minimum.  Returns (value, terms_used, smallest magnitude).
    """
    terms: list[float] = []
    min_mag = math.inf
    min_idx = 0
    r = 0
    while True:
        term = term_at(r)
        if term is None:
            break
        mag = abs(term)
        terms.append(term)
        if 0.0 < mag < min_mag:
            min_mag = mag
            min_idx = r
        if mag > _DIVERGENCE_LOOKAHEAD * min_mag:
            break
        r += 1
    if not terms:
        return 0.0, 1, 0.0
    return (
        math.fsum(terms[: min_idx + 1]),
        min_idx + 1,
        0.0 if math.isinf(min_mag) else min_mag,
    )


def lacunary_direct(x: float, y: float, t: float, truncation: int) -> SeriesResult:
    """Direct series sum_r t^r H_{3r}(x, y) / r!, truncated at the smallest
    term (or at the cap, whichever comes first; the polynomial degree limit
    caps r at 56 regardless)."""

    def term_at(r: int):
        if r > truncation or 3 * r > 170:
            return None
        return t**r * hermite2(3 * r, x, y) / math.factorial(r)

    value, used, last = _sum_to_smallest_term(term_at)
    return SeriesResult(value=value, terms_used=used, last_term=last)


def lacunary_umbral(x: float, y: float, t: float, truncation: int) -> SeriesResult:
    """Umbral route: project the truncated exponential of t (x + sqrt(y) u)^3.

    The square root of a negative y is tracked as an imaginary coefficient;
    projection keeps only even symbol powers, so every surviving power of
    sqrt(y) is an integer power of y and the imaginary part cancels.
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    u = UmbraId(2)
    base = UmbralPoly.constant(x) + monomial(u, halves=2, coeff=cmath.sqrt(complex(y)))
    p = base * base * base * t
    reals: list[float] = []
    imags: list[float] = []
    term_poly = UmbralPoly.constant(1.0)
    last = 0.0
    for k in range(truncation + 1):
        if k > 0:
            term_poly = term_poly * p * (1.0 / k)
        contrib = project(term_poly)
        reals.append(contrib.real)
        imags.append(contrib.imag)
        if contrib != 0:
            last = abs(contrib)
    value = complex(math.fsum(reals), math.fsum(imags))
    return SeriesResult(value=value.real, terms_used=truncation + 1, last_term=last)


def lacunary_factored(x: float, y: float, t: float, truncation: int) -> SeriesResult:
    """Factored route exp(t x^3) * sum_s y^s H_{2s}^(3)(3x^2 t, 3xt, t) / s!.

    The third argument of the inner polynomial is t (not t^2): matching the
    generating function term by term forces (3x^2 t, 3x t, t), and the
    umbral route confirms it numerically.
    """
    factor = math.exp(t * x**3)

    def term_at(s: int):
        if s > truncation or 2 * s > 170:
            return None
        return y**s * hermite3_3var(2 * s, 3.0 * x * x * t, 3.0 * x * t, t) / math.factorial(s)

    value, used, last = _sum_to_smallest_term(term_at)
    return SeriesResult(value=factor * value, terms_used=used, last_term=factor * last)
