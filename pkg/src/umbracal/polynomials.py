"""Hermite polynomial families evaluated by explicit sums, the combinatorial
multinomial route, and the repeated-derivative series they encode.

All evaluators share the same discipline: multinomial coefficients are
computed exactly as big integers and converted to doubles per term, terms
are accumulated with exact (fsum) summation, and no real roots of possibly
negative arguments are ever taken (selector zeros keep every surviving
power integral).  Degrees are capped at 170 where a coefficient must fit
in a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .numbers import hermite_number
from .series import SeriesResult

__all__ = [
    "PolyFamily",
    "PolyFamilyId",
    "hermite2",
    "hermite_m",
    "hermite3_3var",
    "hermite_multivar",
    "multinomial_expansion",
    "dgauss_poly",
    "dcubic_poly",
    "dseries",
]

#: largest degree whose leading multinomial coefficient fits in a double
MAX_DEGREE = 170


class PolyFamily(Enum):
    TWO_VAR = "two-var"
    M_ORDER = "m-order"
    THIRD_ORDER_THREE_VAR = "third-order-three-var"
    MULTI_VAR = "multi-var"


@dataclass(frozen=True)
class PolyFamilyId:
    """Identifies a Hermite family and routes evaluation."""

    kind: PolyFamily
    m: int = 2

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("order m must be >= 2")


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be an integer >= 0, got {n!r}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds double-precision evaluation limit {MAX_DEGREE}")


def hermite_m(m: int, n: int, x: float, y: float) -> float:
    """Order-m two-variable Hermite polynomial
    n! sum_r x^(n-mr) y^r / (r! (n-mr)!)."""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"order must by an integer >= 2, got {m!r}")
    _check_degree(n)
    nf = math.factorial(n)
    terms = []
    for r in range(n // m + 1):
        coef = nf // (math.factorial(r) * math.factorial(n - m * r))
        terms.append(float(coef) * x ** (n - m * r) * y**r)
    return math.fsum(terms)


def hermite2(n: int, x: float, y: float) -> float:
    """Two-variable Hermite polynomial H_n(x, y) (order 2)."""
    return hermite_m(2, n, x, y)


def hermite3_3var(n: int, x: float, y: float, z: float) -> float:
    """Third-order three-variable Hermite polynomial
    n! sum_r H_{n-3r}(x, y) z^r / ((n-3r)! r!)."""
    _check_degree(n)
    nf = math.factorial(n)
    terms = []
    for r in range(n // 3 + 1):
        coef = nf // (math.factorial(r) * math.factorial(n - 3 * r))
        terms.append(float(coef) * hermite2(n - 3 * r, x, y) * z**r)
    return math.fsum(terms)


def hermite_multivar(n: int, xs: list[float]) -> float:
    """Multi-variable Hermite polynomial of order m = len(xs) over
    (x_1, ..., x_m), the value of the umbral multinomial
    (x_1 + sum_s x_s^(1/s) u_s)^n projected over the product of vacua.

    Evaluated by the root-free nested sum (surviving powers of each x_s are
    integral), so arbitrary real arguments are accepted.
    """
    _check_degree(n)
    xs = list(xs)
    m = len(xs)
    if m < 2:
        raise ValueError("need at least two variables")
    nf = math.factorial(n)
    terms: list[float] = []

    def descend(s: int, remaining: int, denom: int, power: float) -> None:
        if s > m:
            # remaining goes to the plain first variable
            terms.append(float(nf // (denom * math.factorial(remaining))) * power * xs[0] ** remaining)
            return
        j = 0
        while s * j <= remaining:
            descend(s + 1, remaining - s * j, denom * math.factorial(j), power * xs[s - 1] ** j)
            j += 1

    descend(2, n, 1, 1.0)
    return math.fsum(terms)


def multinomial_expansion(n: int, x: float, y: float, z: float) -> float:
    """Newton-multinomial route to the third-order three-variable family:
    sum over k1+k2+k3 = n of n!/(k1! k2! k3!) x^k1 y^(k2/2) h_k2 z^(k3/3) (3)h_k3.

    Terms with a vanishing Hermite number are skipped before any fractional
    power is formed, which keeps the surviving powers of y and z integral
    (the root form is equivalent on y >= 0).
    """
    _check_degree(n)
    nf = math.factorial(n)
    terms = []
    for k2 in range(0, n + 1, 2):
        h2 = hermite_number(2, k2)
        for k3 in range(0, n - k2 + 1, 3):
            h3 = hermite_number(3, k3)
            k1 = n - k2 - k3
            coef = nf // (math.factorial(k1) * math.factorial(k2) * math.factorial(k3))
            terms.append(
                float(coef * h2 * h3) * x**k1 * y ** (k2 // 2) * z ** (k3 // 3)
            )
    return math.fsum(terms)


def dgauss_poly(n: int, x: float) -> float:
    """n-th derivative of exp(x^2), in closed polynomial form H_n(2x, 1) e^(x^2)."""
    return hermite2(n, 2.0 * x, 1.0) * math.exp(x * x)


def dcubic_poly(n: int, x: float) -> float:
    """n-th derivative of exp(-x^3), via H_n^(3)(-3x^2, -3x, -1) e^(-x^3)."""
    return hermite3_3var(n, -3.0 * x * x, -3.0 * x, -1.0) * math.exp(-(x**3))


def dseries(n: int, x: float, truncation: int, sign: int = 1) -> SeriesResult:
    """Repeated-derivative series for the order-2 and order-3 Gaussians.

    sign=+1: sum_{s<=N} h_{s+n} x^s / s!, the series for the n-th derivative
    of exp(x^2).  sign=-1: (-1)^n sum_{s<=N} (3)h_{s+n} (-x)^s / s!, the n-th
    derivative of exp(-x^3).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError(f"truncation must be an integer >= 0, got {truncation!r}")
    order = 2 if sign == 1 else 3
    u = x if sign == 1 else -x
    terms = []
    last_nonzero = 0.0
    for s in range(truncation + 1):
        h = hermite_number(order, s + n)
        if h == 0:
            continue
        term = float(h) * u**s / math.factorial(s)
        terms.append(term)
        if term != 0.0:
            last_nonzero = abs(term)
    value = math.fsum(terms)
    if sign == -1 and n % 2:
        value = -value
    return SeriesResult(value=value, terms_used=truncation + 1, last_term=last_nonzero)
