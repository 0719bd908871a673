"""Uniform return type for truncated series, so convergence is auditable."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["SeriesResult"]


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series plus a truncation audit.

    terms_used counts every index actually summed (the r = 0 term counts);
    last_term is the magnitude of the final retained term, a proxy for the
    truncation error of convergent series and the optimal-truncation floor
    of asymptotic ones.
    """

    value: complex | float
    terms_used: int
    last_term: float

    def __post_init__(self) -> None:
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if self.last_term < 0:
            raise ValueError("last_term must be >= 0")
