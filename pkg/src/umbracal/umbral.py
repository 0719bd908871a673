"""Finite polynomial algebra over named umbral symbols with independent
vacua, and the projection that replaces symbol powers by Hermite numbers.

An umbra is identified by its order m; distinct orders commute and project
independently (their vacua factorize).  Exponents are stored as integer
counts of halves so that half powers of a symbol are first-class citizens.
Ordinary variables are bound to numbers before entering the algebra, so a
polynomial is just a finite map from exponent keys to complex coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .numbers import hermite_number, hermite_number_fractional

__all__ = ["UmbraId", "UmbralPoly", "monomial", "add", "mul", "pow", "project", "umbral_exp"]

_builtin_pow = pow

# key: tuple of (order, halves) pairs, sorted by order, halves > 0
_Key = tuple[tuple[int, int], ...]
_EMPTY_KEY: _Key = ()


@dataclass(frozen=True, order=True)
class UmbraId:
    """One umbral symbol, identified by the order of its Hermite numbers."""

    order: int

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 2:
            raise ValueError(f"umbra order must be an integer >= 2, got {self.order!r}")


class UmbralPoly:
    """Immutable finite linear combination of umbral monomials.

    Supports +, -, *, ** with UmbralPoly and scalar operands.  Terms whose
    coefficient is exactly zero are dropped on construction; no epsilon
    pruning happens, so algebraic identities are never silently altered.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[_Key, complex] | None = None):
        cleaned: dict[_Key, complex] = {}
        for key, coeff in (terms or {}).items():
            c = complex(coeff)
            if c != 0:
                cleaned[key] = c
        self._terms = cleaned

    @classmethod
    def constant(cls, value: complex) -> "UmbralPoly":
        return cls({_EMPTY_KEY: complex(value)})

    @property
    def terms(self) -> dict[_Key, complex]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UmbralPoly):
            return self._terms == other._terms
        if isinstance(other, (int, float, complex)):
            return self == UmbralPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "UmbralPoly(0)"
        parts = []
        for key, coeff in sorted(self._terms.items()):
            factors = "".join(f"*h{m}^{halves}/2" for m, halves in key)
            parts.append(f"({coeff!r}){factors}")
        return "UmbralPoly(" + " + ".join(parts) + ")"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "UmbralPoly | complex") -> "UmbralPoly":
        other = _coerce(other)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0.0) + coeff
        return UmbralPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "UmbralPoly":
        return UmbralPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "UmbralPoly | complex") -> "UmbralPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: complex) -> "UmbralPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "UmbralPoly | complex") -> "UmbralPoly":
        other = _coerce(other)
        out: dict[_Key, complex] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = _merge_keys(ka, kb)
                out[key] = out.get(key, 0.0) + ca * cb
        return UmbralPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UmbralPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be an integer >= 0, got {n!r}")
        result = UmbralPoly.constant(1.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result


def _coerce(value: "UmbralPoly | complex") -> UmbralPoly:
    if isinstance(value, UmbralPoly):
        return value
    if isinstance(value, (int, float, complex)):
        return UmbralPoly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} in umbral arithmetic")


def _merge_keys(a: _Key, b: _Key) -> _Key:
    if not a:
        return b
    if not b:
        return a
    exps: dict[int, int] = dict(a)
    for order, halves in b:
        exps[order] = exps.get(order, 0) + halves
    return tuple(sorted(exps.items()))


def monomial(u: UmbraId, halves: int, coeff: complex = 1.0) -> UmbralPoly:
    """Single-term polynomial coeff * u^(halves/2)."""
    if not isinstance(halves, int) or halves < 0:
        raise ValueError(f"halves must be an integer >= 0, got {halves!r}")
    key = _EMPTY_KEY if halves == 0 else ((u.order, halves),)
    return UmbralPoly({key: complex(coeff)})


def add(a: UmbralPoly, b: UmbralPoly) -> UmbralPoly:
    return _coerce(a) + _coerce(b)


def mul(a: UmbralPoly, b: UmbralPoly) -> UmbralPoly:
    return _coerce(a) * _coerce(b)


def pow(a: UmbralPoly, n: int) -> UmbralPoly:  # noqa: A001 - spec interface name
    return _coerce(a) ** n


@lru_cache(maxsize=4096)
def _moment(order: int, halves: int) -> float:
    """Value substituted for one symbol power u^(halves/2) on projection."""
    if halves % 2 == 0:
        exact = hermite_number(order, halves // 2)
        value = float(exact)
        if math.isinf(value):
            raise OverflowError(
                f"Hermite number of order {order} at index {halves // 2} exceeds double range"
            )
        return value
    return hermite_number_fractional(order, halves / 2.0)


def project(p: UmbralPoly) -> complex:
    """Apply every vacuum: replace each symbol power by its Hermite number,
    multiply factors across distinct umbrae, and sum terms exactly."""
    reals: list[float] = []
    imags: list[float] = []
    for key, coeff in p._terms.items():
        factor = 1.0
        for order, halves in key:
            factor *= _moment(order, halves)
            if factor == 0.0:
                break
        if factor == 0.0:
            continue
        contrib = coeff * factor
        reals.append(contrib.real)
        imags.append(contrib.imag)
    return complex(math.fsum(reals), math.fsum(imags))


def umbral_exp(p: UmbralPoly, truncation: int) -> UmbralPoly:
    """Truncated exponential sum_{k=0}^{N} p^k / k!.

    The caller owns truncation-error accounting; this is a plain partial sum
    of the shift-exponential expansion.
    """
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError(f"truncation must be an integer >= 0, got {truncation!r}")
    p = _coerce(p)
    acc = UmbralPoly.constant(1.0)
    term = UmbralPoly.constant(1.0)
    for k in range(1, truncation + 1):
        term = term * p * (1.0 / k)
        acc = acc + term
    return acc
