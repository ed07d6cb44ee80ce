"""Exact Fourier transforms of subsets and point measures of ``Z_p``.

The transform is ``μ̂(ξ) = ∫ conj(χ(ξx)) dμ(x)`` with ``χ(x) = exp(2πi{x})``.
For anything supported in ``Z_p`` it only depends on ``ξ`` modulo ``Z_p``,
so frequencies are :class:`~padic_tiles.padic.Frequency` pairs ``(k, u)``
and every value is a :class:`~padic_tiles.cyclotomic.CyclotomicSum` over
``p^k``-th roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator, Union

from .cyclotomic import CyclotomicSum
from .errors import DomainError, PrecisionError
from .padic import (
    Ball,
    CompactOpenSet,
    Frequency,
    LevelSet,
    PointSet,
    _same_base,
    valuation,
)

__all__ = [
    "FTValue",
    "ft_ball",
    "ft_point_measure",
    "ft_level_set",
    "ft_compact_open",
    "ft",
    "max_pair_valuation",
    "check_pair_vanishing",
    "check_nonvanishing",
    "check_local_constancy",
    "frequencies",
    "zero_set",
]

FTValue = CyclotomicSum

Transformable = Union[Ball, CompactOpenSet, LevelSet, PointSet]


def ft_ball(b: Ball, xi: Frequency) -> FTValue:
    """Transform of the indicator of ``c + p^k Z_p``.

    Equal to ``p^-k · conj(χ(cξ))`` when ``|ξ|_p <= p^k`` and to 0 otherwise.
    """
    _same_base(b, xi)
    k = xi.exponent
    if k > b.level:
        return CyclotomicSum.zero(b.base, k)
    weight = Fraction(1, b.p**b.level)
    return CyclotomicSum.root(-b.center * xi.unit, k, b.base, weight)


def ft_point_measure(t_set: PointSet, xi: Frequency) -> FTValue:
    """``Σ_{t∈T} conj(χ(tξ))``, the transform of the counting measure on T."""
    _same_base(t_set, xi)
    k = xi.exponent
    if t_set.precision < k:
        raise PrecisionError(
            f"points known mod {t_set.p}^{t_set.precision} do not determine "
            f"the transform at |ξ| = {t_set.p}^{k}"
        )
    return CyclotomicSum.from_exponents((-t * xi.unit for t in t_set.points), k, t_set.base)


def ft_level_set(omega: LevelSet, xi: Frequency) -> FTValue:
    """Transform of the indicator of a union of level-``n`` balls."""
    _same_base(omega, xi)
    k = xi.exponent
    if k > omega.level:
        return CyclotomicSum.zero(omega.base, k)
    return CyclotomicSum.from_exponents(
        (-x * xi.unit for x in omega.members), k, omega.base, Fraction(1, omega.size)
    )


def ft_compact_open(s: CompactOpenSet, xi: Frequency) -> FTValue:
    _same_base(s, xi)
    total = CyclotomicSum.zero(s.base, xi.exponent)
    for b in s.balls:
        total = total + ft_ball(b, xi)
    return total


def ft(obj: Transformable, xi: Frequency) -> FTValue:
    """Dispatch on the kind of object being transformed."""
    if isinstance(obj, Ball):
        return ft_ball(obj, xi)
    if isinstance(obj, CompactOpenSet):
        return ft_compact_open(obj, xi)
    if isinstance(obj, LevelSet):
        return ft_level_set(obj, xi)
    if isinstance(obj, PointSet):
        return ft_point_measure(obj, xi)
    raise TypeError(f"no Fourier transform for {type(obj).__name__}")


def max_pair_valuation(t_set: PointSet) -> int:
    """Largest valuation of ``t - t'`` over distinct pairs; -1 for a singleton."""
    return t_set.max_pair_valuation


def check_pair_vanishing(s_points: PointSet, xi: Frequency) -> tuple[bool, bool]:
    """Both sides of the vanishing criterion for a p-point set S.

    Returns ``(transform is zero, |(s - s')ξ|_p == p for all pairs)``;
    the two are computed independently and should always agree.
    """
    if len(s_points) != s_points.p:
        raise DomainError(f"need exactly p = {s_points.p} points, got {len(s_points)}")
    ft_is_zero = ft_point_measure(s_points, xi).is_zero()
    # |Δξ|_p = p^(k - v(Δ)), which equals p iff v(Δ) = k - 1
    pairwise = xi.exponent >= 1 and all(
        xi.exponent - valuation(b - a, xi.base) == 1
        for a, b in combinations(s_points.points, 2)
    )
    return ft_is_zero, pairwise


def check_nonvanishing(t_set: PointSet, xi: Frequency) -> bool:
    """True when ``μ̂_T(ξ) != 0``; only defined for ``|ξ|_p > p^(γ_T + 1)``."""
    gamma = max_pair_valuation(t_set)
    if xi.exponent <= gamma + 1:
        raise DomainError(
            f"|ξ|_p = {xi.p}^{xi.exponent} is not above {xi.p}^{gamma + 1}"
        )
    return not ft_point_measure(t_set, xi).is_zero()


def check_local_constancy(
    obj: Transformable, xi: Frequency | Fraction | int, u_shift: Fraction | int
) -> bool:
    """Compare the transform at ``ξ`` and at ``ξ + u`` for ``u ∈ Z_p``.

    Frequencies may be given as rationals; they are reduced modulo ``Z_p``
    independently, and the two values are compared as exact cyclotomic
    numbers.
    """
    base = obj.base
    u_shift = Fraction(u_shift)
    if u_shift != 0 and valuation(u_shift, base) < 0:
        raise DomainError(f"shift {u_shift} is not in Z_{base.p}")
    x = xi.as_fraction() if isinstance(xi, Frequency) else Fraction(xi)
    here = ft(obj, Frequency.from_rational(x, base))
    there = ft(obj, Frequency.from_rational(x + u_shift, base))
    return here == there


def frequencies(base, max_exponent: int, min_exponent: int = 0) -> Iterator[Frequency]:
    """All frequency classes with ``p^min <= |ξ|_p <= p^max`` in (k, u) order."""
    for k in range(max(min_exponent, 0), max_exponent + 1):
        yield from Frequency.all_with_exponent(base, k)


def zero_set(obj: Transformable, max_exponent: int) -> list[Frequency]:
    """Nontrivial frequencies with ``|ξ|_p <= p^max_exponent`` where the transform vanishes."""
    return [xi for xi in frequencies(obj.base, max_exponent, 1) if ft(obj, xi).is_zero()]
