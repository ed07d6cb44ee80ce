"""Self-check sweeps over the Fourier facts the tiling argument rests on.

Each sweep compares an exact library routine against an independent
computation over every case in a finite range and returns a
:class:`SweepResult`.  ``padic-tiles lemmas`` runs them all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cyclotomic import CyclotomicSum
from .fourier import (
    check_nonvanishing,
    check_pair_vanishing,
    frequencies,
    ft_ball,
    max_pair_valuation,
)
from .padic import Ball, Frequency, PAdicInt, PointSet, as_base, fractional_part

__all__ = [
    "SweepResult",
    "riemann_sum_ball",
    "sweep_ball_transform",
    "sweep_zero_test",
    "sweep_pair_vanishing",
    "sweep_nonvanishing",
    "run_all",
]


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        status = "ok" if self.ok else f"FAILED ({len(self.failures)})"
        return f"{self.name}: {self.checked} cases, {status}"


def riemann_sum_ball(b: Ball, xi: Frequency, n: int) -> CyclotomicSum:
    """``p^-n Σ conj(χ(xξ))`` over the residues ``x mod p^n`` lying in ``b``.

    Characters are constant on classes mod ``p^n`` once ``n >= k``, so this
    finite sum is the integral exactly.
    """
    p = b.p
    k = xi.exponent
    total = CyclotomicSum.zero(b.base, k)
    for x in range(p**n):
        if b.contains_point(x):
            _, m = fractional_part(xi, PAdicInt(b.base, n, x))
            total = total.add_root(-m, Fraction(1, p**n))
    return total


def sweep_ball_transform(p: int, max_level: int = 2, max_exponent: int = 3) -> SweepResult:
    """Ball transforms against Riemann sums, all centers, ``|ξ|_p <= p^max_exponent``."""
    base = as_base(p)
    n = max(max_level, max_exponent) + 1
    result = SweepResult(f"ball transform (p={p}, level<={max_level}, |ξ|<=p^{max_exponent})")
    for level in range(max_level + 1):
        for c in range(p**level):
            b = Ball(base, level, c)
            for xi in frequencies(base, max_exponent):
                result.checked += 1
                if ft_ball(b, xi) != riemann_sum_ball(b, xi, n):
                    result.failures.append(f"{b} at ξ={xi}")
    return result


def sweep_zero_test(
    p: int, max_gamma: int = 3, samples: int = 1000, seed: int = 0, bound: int = 5
) -> SweepResult:
    """Exact zero test against ``|value| < 1e-9`` on random integer sums."""
    rng = random.Random(seed)
    base = as_base(p)
    result = SweepResult(f"zero test vs float (p={p}, γ<={max_gamma}, {samples} samples)")
    for _ in range(samples):
        gamma = rng.randint(0, max_gamma)
        s = _random_sum(rng, base, gamma, bound)
        result.checked += 1
        if s.is_zero() != (abs(s.to_complex()) < 1e-9):
            result.failures.append(f"{s.coeffs} at γ={gamma}")
    return result


def _random_sum(rng: random.Random, base, gamma: int, bound: int) -> CyclotomicSum:
    p = base.p
    n = p**gamma
    if gamma and rng.random() < 0.5:
        # plant a vanishing part so both outcomes get exercised
        stride = n // p
        block = [rng.randint(-bound, bound) for _ in range(stride)]
        coeffs = [block[i % stride] for i in range(n)]
        if rng.random() < 0.5:
            coeffs[rng.randrange(n)] += rng.choice([-1, 1])
        coeffs = [max(-bound, min(bound, c)) for c in coeffs]
    else:
        coeffs = [rng.randint(-bound, bound) for _ in range(n)]
    return CyclotomicSum(base, gamma, tuple(coeffs))


def sweep_pair_vanishing(p: int, precision: int = 2) -> SweepResult:
    """Every p-point subset of ``Z/p^precision`` and every ``1 <= k <= precision``."""
    base = as_base(p)
    result = SweepResult(f"p-point vanishing criterion (p={p}, Z/{p}^{precision})")
    for pts in combinations(range(p**precision), p):
        s = PointSet(base, precision, pts)
        for xi in frequencies(base, precision, 1):
            result.checked += 1
            vanishes, pairwise = check_pair_vanishing(s, xi)
            if vanishes != pairwise:
                result.failures.append(f"S={pts} ξ={xi}: transform zero={vanishes}")
    return result


def sweep_nonvanishing(
    p: int, precision: int = 3, min_size: int = 2, max_size: int = 4, through_zero: bool = False
) -> SweepResult:
    """``μ̂_T(ξ) != 0`` for ``p^(γ_T+1) < |ξ|_p <= p^(γ_T+2)``.

    With ``through_zero`` only sets containing 0 are swept; translating T
    multiplies the transform by a root of unity, so nothing is lost.
    """
    base = as_base(p)
    size = p**precision
    result = SweepResult(
        f"nonvanishing beyond p^(γ_T+1) (p={p}, T ⊆ Z/{p}^{precision}, {min_size}<=|T|<={max_size})"
    )
    for m in range(min_size, max_size + 1):
        if through_zero:
            candidates = ((0, *rest) for rest in combinations(range(1, size), m - 1))
        else:
            candidates = combinations(range(size), m)
        for pts in candidates:
            gamma = max_pair_valuation(PointSet(base, precision, pts))
            k = gamma + 2
            # the points are exact integers, so reading them at precision k is a lift
            t_set = PointSet(base, max(precision, k), pts)
            for xi in Frequency.all_with_exponent(base, k):
                result.checked += 1
                if not check_nonvanishing(t_set, xi):
                    result.failures.append(f"T={pts} ξ={xi}")
    return result


def run_all(p: int, max_gamma: int = 3, seed: int = 0) -> list[SweepResult]:
    """The sweeps behind ``padic-tiles lemmas``, scaled by ``max_gamma``."""
    return [
        sweep_ball_transform(p, max_level=max(max_gamma - 1, 0), max_exponent=max_gamma),
        sweep_zero_test(p, max_gamma=max_gamma, seed=seed),
        sweep_pair_vanishing(p, precision=min(max_gamma, 2)),
        sweep_nonvanishing(p, precision=max_gamma, through_zero=True),
    ]
