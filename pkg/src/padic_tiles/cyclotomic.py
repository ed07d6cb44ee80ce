"""Exact rational combinations of ``p^γ``-th roots of unity.

A :class:`CyclotomicSum` stores the dense coefficient vector of
``Σ a_i ω^i`` with ``ω = exp(2πi / p^γ)``.  Zero testing is exact: for
``γ >= 1`` the sum vanishes iff the coefficients are constant along every
progression ``i, i + p^(γ-1), ..., i + (p-1) p^(γ-1)``.  For integer
coefficients this is the classical vanishing criterion; rational
coefficients reduce to it after multiplying by a common denominator, which
does not change which blocks are constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import DomainError
from .padic import PrimeBase, as_base

__all__ = ["CyclotomicSum", "add_root", "lift", "is_zero", "to_complex"]

Coefficient = int | Fraction


def _exact(w) -> Coefficient:
    kind = type(w)
    if kind is int:
        return w
    if kind is Fraction:
        return w.numerator if w.denominator == 1 else w
    if isinstance(w, bool) or not isinstance(w, Rational):
        raise DomainError(f"coefficients must be exact rationals, got {w!r}")
    if isinstance(w, int):
        return w
    w = Fraction(w)
    return w.numerator if w.denominator == 1 else w


@dataclass(frozen=True, eq=False)
class CyclotomicSum:
    """``Σ coeffs[i] · ω_γ^i`` with exact rational coefficients.

    Equality and hashing compare the complex *values*, not the coefficient
    vectors: ``[1, 1]`` and ``[0, 0]`` at ``p = 2, γ = 1`` are equal.
    """

    base: PrimeBase
    gamma: int
    coeffs: tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        if self.gamma < 0:
            raise DomainError(f"gamma must be >= 0, got {self.gamma}")
        coeffs = tuple(_exact(c) for c in self.coeffs)
        if len(coeffs) != self.base.p**self.gamma:
            raise DomainError(
                f"expected {self.base.p}^{self.gamma} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def _trusted(cls, base: PrimeBase, gamma: int, coeffs: tuple) -> CyclotomicSum:
        # skips validation; coeffs must already be exact and of length p^gamma
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "gamma", gamma)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls, base: PrimeBase | int, gamma: int = 0) -> CyclotomicSum:
        base = as_base(base)
        return cls(base, gamma, (0,) * base.p**gamma)

    @classmethod
    def constant(cls, value, base: PrimeBase | int) -> CyclotomicSum:
        return cls(as_base(base), 0, (value,))

    @classmethod
    def root(
        cls, exponent: int, gamma: int, base: PrimeBase | int, weight: Coefficient = 1
    ) -> CyclotomicSum:
        """``weight · ω_γ^exponent``."""
        return cls.zero(base, gamma).add_root(exponent, weight)

    @classmethod
    def from_exponents(
        cls,
        exponents: Iterable[int],
        gamma: int,
        base: PrimeBase | int,
        weight: Coefficient = 1,
    ) -> CyclotomicSum:
        """``weight · Σ ω_γ^e`` over ``exponents`` (repeats add up)."""
        base = as_base(base)
        n = base.p**gamma
        counts = [0] * n
        for e in exponents:
            counts[e % n] += 1
        weight = _exact(weight)
        if weight != 1:
            counts = [_exact(c * weight) for c in counts]
        return cls._trusted(base, gamma, tuple(counts))

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def order(self) -> int:
        return self.base.p**self.gamma

    def add_root(self, exponent: int, weight: Coefficient = 1) -> CyclotomicSum:
        weight = _exact(weight)
        if weight == 0:
            return self
        coeffs = list(self.coeffs)
        coeffs[exponent % self.order] += weight
        return CyclotomicSum(self.base, self.gamma, tuple(coeffs))

    def lift(self, gamma_new: int) -> CyclotomicSum:
        """The same value written with ``p^gamma_new``-th roots of unity."""
        if gamma_new < self.gamma:
            raise DomainError(f"cannot lift from gamma {self.gamma} down to {gamma_new}")
        if gamma_new == self.gamma:
            return self
        step = self.p ** (gamma_new - self.gamma)
        coeffs: list[Coefficient] = [0] * (self.order * step)
        for i, c in enumerate(self.coeffs):
            coeffs[i * step] = c
        return CyclotomicSum(self.base, gamma_new, tuple(coeffs))

    def _aligned(self, other: CyclotomicSum) -> tuple[CyclotomicSum, CyclotomicSum]:
        if not isinstance(other, CyclotomicSum):
            raise TypeError(f"cannot combine CyclotomicSum with {type(other).__name__}")
        if other.base != self.base:
            raise DomainError(f"mixed primes: {self.p} and {other.p}")
        g = max(self.gamma, other.gamma)
        return self.lift(g), other.lift(g)

    def __add__(self, other: CyclotomicSum) -> CyclotomicSum:
        a, b = self._aligned(other)
        return CyclotomicSum(a.base, a.gamma, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> CyclotomicSum:
        return CyclotomicSum(self.base, self.gamma, tuple(-c for c in self.coeffs))

    def __sub__(self, other: CyclotomicSum) -> CyclotomicSum:
        return self + (-other)

    def scale(self, factor: Coefficient) -> CyclotomicSum:
        factor = _exact(factor)
        return CyclotomicSum(self.base, self.gamma, tuple(c * factor for c in self.coeffs))

    def conjugate(self) -> CyclotomicSum:
        n = self.order
        return CyclotomicSum(
            self.base, self.gamma, tuple(self.coeffs[-i % n] for i in range(n))
        )

    def is_zero(self) -> bool:
        c = self.coeffs
        if self.gamma == 0:
            return c[0] == 0
        stride = self.order // self.p
        for i in range(stride):
            first = c[i]
            for j in range(i + stride, self.order, stride):
                if c[j] != first:
                    return False
        return True

    def reduced(self) -> CyclotomicSum:
        """Unique representative: smallest γ, and the top block of each
        progression cleared (coefficients on the basis ``ω^i``,
        ``i < p^γ - p^(γ-1)``).
        """
        s = self
        if s.gamma > 0:
            stride = s.order // s.p
            top = (s.p - 1) * stride
            c = list(s.coeffs)
            for i in range(stride):
                pivot = c[top + i]
                if pivot:
                    for j in range(i, s.order, stride):
                        c[j] -= pivot
            s = CyclotomicSum(s.base, s.gamma, tuple(c))
        while s.gamma > 0 and all(c == 0 for i, c in enumerate(s.coeffs) if i % s.p):
            s = CyclotomicSum(s.base, s.gamma - 1, s.coeffs[:: s.p])
        return s

    def as_rational(self) -> Fraction | None:
        """The value as a rational number, or None if it is not rational."""
        r = self.reduced()
        return Fraction(r.coeffs[0]) if r.gamma == 0 else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = CyclotomicSum.constant(other, self.base)
        if not isinstance(other, CyclotomicSum):
            return NotImplemented
        if other.base != self.base:
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.p, r.gamma, r.coeffs))

    def to_complex(self) -> complex:
        """Floating-point value; for cross-checks only."""
        n = self.order
        total = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(2j * math.pi * i / n)
        return total

    def terms(self) -> list[tuple[int, Coefficient]]:
        """Nonzero ``(exponent, coefficient)`` pairs."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        w = f"ω_{self.order}" if self.gamma else ""
        parts = []
        for i, c in terms:
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}·{w}^{i}" if c != 1 else f"{w}^{i}")
        return " + ".join(parts)


def add_root(s: CyclotomicSum, exponent: int, weight: Coefficient) -> CyclotomicSum:
    return s.add_root(exponent, weight)


def lift(s: CyclotomicSum, gamma_new: int) -> CyclotomicSum:
    return s.lift(gamma_new)


def is_zero(s: CyclotomicSum) -> bool:
    return s.is_zero()


def to_complex(s: CyclotomicSum) -> complex:
    return s.to_complex()
