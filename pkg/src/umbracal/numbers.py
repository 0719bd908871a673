"""Hermite numbers of arbitrary order: exact integer values and the
half-integer real extension.

The order-m Hermite number at index r is r!/(r/m)! when m divides r and 0
otherwise.  Integer indices are computed exactly with big integers; the
circular-function form (|cos| selectors) is used only for the half-integer
extension, which exists for m in {2, 3}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .special import gamma

__all__ = [
    "HermiteNumberTable",
    "hermite_number",
    "hermite_number_fractional",
    "build_table",
]

_SQRT2_HALF = math.sqrt(2.0) / 2.0
_SQRT3_HALF = math.sqrt(3.0) / 2.0

# |cos(k*pi/4)| and |cos(k*pi/6)| on exact lattice points, avoiding float
# cosine at arguments where the result must be exactly 0 or 1.
_ABS_COS_QUARTER = (1.0, _SQRT2_HALF, 0.0, _SQRT2_HALF, 1.0, _SQRT2_HALF, 0.0, _SQRT2_HALF)
_ABS_COS_SIXTH = (1.0, _SQRT3_HALF, 0.5, 0.0, 0.5, _SQRT3_HALF) * 2
_ABS_COS_HALF = (1.0, 0.0, 1.0, 0.0)


def _validate_order(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"order must be an integer >= 2, got {m!r}")


def hermite_number(m: int, r: int) -> int:
    """Exact order-m Hermite number: r!/(r/m)! if m | r, else 0."""
    _validate_order(m)
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"index must be an integer >= 0, got {r!r}")
    if r % m:
        return 0
    return math.factorial(r) // math.factorial(r // m)


def hermite_number_fractional(m: int, rho: float | Fraction) -> float:
    """Order-m Hermite number at a half-integer index, as a real number.

    Uses the circular-function form: for m = 2,
    Gamma(rho+1)/Gamma(rho/2+1) * |cos(rho pi / 2)|, and for m = 3 the
    bracket 2|cos(rho pi / 3)| - |cos(rho pi)| replaces the cosine.  The
    m = 3 extension at genuinely fractional index is experimental: it is
    exposed because the bracket form suggests it, but no identity in this
    library depends on it.  Orders m >= 4 support integer indices only.
    """
    _validate_order(m)
    halves = _as_halves(rho)
    if halves < 0:
        raise ValueError(f"index must be >= 0, got {rho!r}")
    rho_f = halves / 2.0
    if m == 2:
        sel = _ABS_COS_QUARTER[halves % 8]
        if sel == 0.0:
            return 0.0
        return gamma(rho_f + 1.0) / gamma(rho_f / 2.0 + 1.0) * sel
    if m == 3:
        sel = 2.0 * _ABS_COS_SIXTH[halves % 12] - _ABS_COS_HALF[halves % 4]
        if sel == 0.0:
            return 0.0
        return gamma(rho_f + 1.0) / gamma(rho_f / 3.0 + 1.0) * sel
    if halves % 2:
        raise ValueError(
            f"fractional index {rho!r} unsupported for order {m} (only m in {{2, 3}})"
        )
    return float(hermite_number(m, halves // 2))


def _as_halves(rho: float | Fraction | int) -> int:
    """Express rho as an integer count of halves; reject other denominators."""
    if isinstance(rho, int):
        return 2 * rho
    if isinstance(rho, Fraction):
        doubled = 2 * rho
        if doubled.denominator != 1:
            raise ValueError(f"index denominator must divide 2, got {rho!r}")
        return int(doubled)
    doubled = 2.0 * float(rho)
    if doubled != math.floor(doubled):
        raise ValueError(f"index denominator must divide 2, got {rho!r}")
    return int(doubled)


@dataclass(frozen=True)
class HermiteNumberTable:
    """Exact Hermite numbers of one order, indexed r = 0..r_max."""

    order: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_order(self.order)
        if not self.values or self.values[0] != 1:
            raise ValueError("table must start at index 0 with value 1")

    @property
    def r_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, r: int) -> int:
        return self.values[r]


def build_table(m: int, r_max: int) -> HermiteNumberTable:
    """Tabulate order-m Hermite numbers for r = 0..r_max by the
    multiplicative recurrence values[km] = values[(k-1)m] * ((k-1)m+1 .. km) / k."""
    _validate_order(m)
    if not isinstance(r_max, int) or r_max < 0:
        raise ValueError(f"r_max must be an integer >= 0, got {r_max!r}")
    values = [0] * (r_max + 1)
    values[0] = 1
    acc = 1
    k = 1
    while k * m <= r_max:
        block = 1
        for j in range((k - 1) * m + 1, k * m + 1):
            block *= j
        acc = acc * block // k
        values[k * m] = acc
        k += 1
    return HermiteNumberTable(order=m, values=tuple(values))
