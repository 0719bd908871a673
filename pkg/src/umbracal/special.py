"""Scalar special functions: gamma (Lanczos) and the Airy function Ai.

Both are implemented from scratch so that every identity in the library can
be checked against an independent route (stdlib / quadrature / series).
"""

from __future__ import annotations

import math

__all__ = ["gamma", "lgamma", "airy", "AIRY_ENVELOPE"]

# Lanczos approximation, g = 7, 9 coefficients (Godfrey's set).  Relative
# accuracy ~1e-14 on the positive real axis; negative axis via reflection.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x: float) -> float:
    """Gamma function for real arguments (poles at 0, -1, -2, ... raise)."""
    if x <= 0.0 and x == math.floor(x):
        raise ValueError(f"gamma pole at x = {x}")
    if x < 0.5:
        # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    x -= 1.0
    series = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        series += _LANCZOS_COEF[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    # exponent form: t**(x+0.5) alone overflows long before Gamma does
    return math.exp((x + 0.5) * math.log(t) - t + math.log(math.sqrt(2.0 * math.pi) * series))


def lgamma(x: float) -> float:
    """log Gamma(x) for x > 0, assembled from the same Lanczos pieces."""
    if x <= 0.0:
        raise ValueError("lgamma requires x > 0")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - lgamma(1.0 - x)
    x -= 1.0
    series = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        series += _LANCZOS_COEF[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (x + 0.5) * math.log(t) - t + math.log(series)


# --------------------------------------------------------------------------
# Airy function Ai on the real line.
#
# Maclaurin pair on [-7, 5], asymptotic expansions beyond, truncated at the
# smallest term.  The negative-side switch sits at -7 rather than -6: the
# optimal-truncation floor of the oscillatory expansion at |t| = 6 is ~3e-10,
# too coarse for the 1e-10 continuity requirement, while at 7 it is ~5e-12.
# --------------------------------------------------------------------------

# Ai(0) = 3^(-2/3)/Gamma(2/3) and -Ai'(0) = 3^(-1/3)/Gamma(1/3).
_AI0 = 0.3550280538878172
_AIP0 = 0.2588194037928068

_MACLAURIN_NEG = -7.0
_MACLAURIN_POS = 5.0

#: Public evaluation envelope; accuracy is validated on [-25, 25] only.
AIRY_ENVELOPE = 25.0


def _airy_maclaurin(t: float) -> float:
    # Ai(t) = AI0 * f(t) - AIP0 * g(t), the two standard ODE solutions
    t3 = t * t * t
    f_terms = [1.0]
    a = 1.0
    k = 0
    while abs(a) > 1e-20:
        a *= t3 / ((3 * k + 2) * (3 * k + 3))
        f_terms.append(a)
        k += 1
        if k > 80:
            break
    g_terms = [t]
    b = t
    k = 0
    while abs(b) > 1e-20:
        b *= t3 / ((3 * k + 3) * (3 * k + 4))
        g_terms.append(b)
        k += 1
        if k > 80:
            break
    return _AI0 * math.fsum(f_terms) - _AIP0 * math.fsum(g_terms)


def _asymptotic_u(zeta: float, parity: int, max_terms: int = 40) -> float:
    """Sum (-1)^k u_j / zeta^j over j = parity, parity+2, ... at optimal truncation."""
    # u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k)
    u = 1.0
    terms = []
    prev = math.inf
    j = 0
    k_half = 0
    while j < max_terms:
        if j >= parity and (j - parity) % 2 == 0:
            t = u / zeta**j * (-1.0 if ((j - parity) // 2) % 2 else 1.0)
            if abs(t) >= prev:
                break
            terms.append(t)
            prev = abs(t)
        j += 1
        k_half += 1
        u *= (6 * k_half - 5) * (6 * k_half - 3) * (6 * k_half - 1) / ((2 * k_half - 1) * 216.0 * k_half)
    return math.fsum(terms)


def _airy_asymptotic_pos(t: float) -> float:
    zeta = (2.0 / 3.0) * t * math.sqrt(t)
    s = _asymptotic_u_alternating(zeta)
    return math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * t**0.25) * s


def _asymptotic_u_alternating(zeta: float, max_terms: int = 40) -> float:
    u = 1.0
    terms = [1.0]
    prev = 1.0
    for k in range(1, max_terms):
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        t = (-1.0 if k % 2 else 1.0) * u / zeta**k
        if abs(t) >= prev:
            break
        terms.append(t)
        prev = abs(t)
    return math.fsum(terms)


def _airy_asymptotic_neg(t: float) -> float:
    z = -t
    zeta = (2.0 / 3.0) * z * math.sqrt(z)
    p = _asymptotic_u(zeta, parity=0)
    q = _asymptotic_u(zeta, parity=1)
    phase = zeta - 0.25 * math.pi
    return (math.cos(phase) * p + math.sin(phase) * q) / (math.sqrt(math.pi) * z**0.25)


def _airy_unchecked(t: float) -> float:
    """Ai(t) without the envelope check (internal quadrature weights)."""
    if t > _MACLAURIN_POS:
        return _airy_asymptotic_pos(t)
    if t < _MACLAURIN_NEG:
        return _airy_asymptotic_neg(t)
    return _airy_maclaurin(t)


def airy(t: float) -> float:
    """Airy function Ai(t) for |t| <= 25 (implementation envelope)."""
    if abs(t) > AIRY_ENVELOPE:
        raise ValueError(f"airy argument {t} outside envelope |t| <= {AIRY_ENVELOPE}")
    return _airy_unchecked(t)
