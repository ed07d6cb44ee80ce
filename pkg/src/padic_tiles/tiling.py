"""Tiling pairs ``(Ω, T)`` of ``Z_p`` at finite resolution.

A subset ``Ω ⊆ Z/p^n`` (a union of level-``n`` balls) tiles ``Z_p`` with
complement ``T`` when every residue mod ``p^n`` is covered by exactly one
translate ``Ω + t``.  Bounded tiles are compact open: every exact tile is a
union of residue classes mod ``p^(γ_T + 1)``, and :func:`regularize`
recovers that set from a noisy description by majority vote per class.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import AmbiguousCellError, DomainError, PrecisionError
from .fourier import ft_point_measure, max_pair_valuation
from .padic import (
    Ball,
    CompactOpenSet,
    Frequency,
    LevelSet,
    PointSet,
    PrimeBase,
    _same_base,
    as_base,
    canonicalize,
)
from .cyclotomic import CyclotomicSum

__all__ = [
    "TilingReport",
    "CensusRecord",
    "gamma_t",
    "verify_tiling",
    "verify_tiling_spectral",
    "regularize",
    "find_complements",
    "enumerate_tiles",
    "theorem_shadow_check",
    "census",
    "resolve_jobs",
]

JOBS_ENV = "PADIC_TILES_JOBS"


@dataclass(frozen=True)
class TilingReport:
    """Outcome of a tiling check.

    ``coverage_histogram`` maps a coverage count to how many residues have
    it.  The spectral check never computes coverage, so it leaves the
    histogram as ``None`` and reports the offending frequency instead.
    """

    is_tiling: bool
    witness: int | None = None
    coverage_histogram: dict[int, int] | None = None
    method: str = "direct"
    frequency: Frequency | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        out: dict = {"tiling": self.is_tiling, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.coverage_histogram is not None:
            out["coverage_histogram"] = {
                str(k): v for k, v in sorted(self.coverage_histogram.items())
            }
        if self.frequency is not None:
            out["frequency"] = {"k": self.frequency.exponent, "u": self.frequency.unit}
        if self.reason:
            out["reason"] = self.reason
        return out


def gamma_t(t_set: PointSet) -> int:
    """Largest valuation of a difference of two distinct points of ``T``."""
    if len(t_set) < 2:
        raise DomainError("gamma_T needs at least two points")
    return max_pair_valuation(t_set)


def _gamma_or_singleton(t_set: PointSet) -> int:
    return max_pair_valuation(t_set)


def _check_pair(omega: LevelSet, t_set: PointSet) -> None:
    _same_base(omega, t_set)
    if omega.level != t_set.precision:
        raise DomainError(
            f"Ω is given at level {omega.level} but T at precision {t_set.precision}"
        )


def _rotations(mask: int, size: int) -> list[int]:
    full = (1 << size) - 1
    return [((mask << t) | (mask >> (size - t))) & full for t in range(size)]


def verify_tiling(omega: LevelSet, t_set: PointSet) -> TilingReport:
    """Count, for every residue ``x``, the translates ``Ω + t`` containing it."""
    _check_pair(omega, t_set)
    size = omega.size
    counts = [0] * size
    for t in t_set.points:
        for x in omega.members:
            counts[(x + t) % size] += 1
    histogram = dict(sorted(Counter(counts).items()))
    witness = next((x for x, c in enumerate(counts) if c != 1), None)
    return TilingReport(witness is None, witness, histogram)


def verify_tiling_spectral(omega: LevelSet, t_set: PointSet) -> TilingReport:
    """Tiling test through the transforms.

    ``(Ω, T)`` tiles iff ``|Ω| |T| = p^n`` and at every nontrivial frequency
    ``|ξ|_p <= p^n`` one of ``1̂_Ω(ξ)``, ``μ̂_T(ξ)`` vanishes.
    """
    _check_pair(omega, t_set)
    if len(omega) * len(t_set) != omega.size:
        return TilingReport(
            False,
            method="spectral",
            reason=f"mass {len(omega)}·{len(t_set)} != {omega.size}",
        )
    for k in range(1, omega.level + 1):
        for xi in Frequency.all_with_exponent(omega.base, k):
            # positive scaling does not change vanishing, so skip the p^-n weight
            omega_hat = CyclotomicSum.from_exponents(
                (-x * xi.unit for x in omega.members), k, omega.base
            )
            if omega_hat.is_zero():
                continue
            if ft_point_measure(t_set, xi).is_zero():
                continue
            return TilingReport(
                False,
                method="spectral",
                frequency=xi,
                reason=f"both transforms are nonzero at ξ = {xi}",
            )
    return TilingReport(True, method="spectral")


def _cell_counts(omega: LevelSet, cell_level: int) -> list[int]:
    modulus = omega.p**cell_level
    counts = [0] * modulus
    for x in omega.members:
        counts[x % modulus] += 1
    return counts


def regularize(omega: LevelSet, t_set: PointSet) -> CompactOpenSet:
    """The compact open set closest to ``Ω``: classes mod ``p^(γ_T + 1)``
    that are more than half full.

    Exact on exact tiles; any sub-majority corruption inside a class is
    voted away.  A class exactly half full raises
    :class:`~padic_tiles.errors.AmbiguousCellError`.
    """
    base = _same_base(omega, t_set)
    cell_level = _gamma_or_singleton(t_set) + 1
    if omega.level < cell_level:
        raise PrecisionError(
            f"Ω at level {omega.level} is coarser than the regularization level {cell_level}"
        )
    capacity = omega.p ** (omega.level - cell_level)
    balls = []
    for c, count in enumerate(_cell_counts(omega, cell_level)):
        if 2 * count == capacity:
            raise AmbiguousCellError(
                f"cell {c} mod {omega.p}^{cell_level} is exactly half full", cell=c
            )
        if 2 * count > capacity:
            balls.append(Ball(base, cell_level, c))
    return canonicalize(balls, base)


def theorem_shadow_check(omega: LevelSet, t_set: PointSet) -> bool:
    """True iff the tile ``Ω`` is a union of classes mod ``p^(γ_T + 1)``."""
    if not verify_tiling(omega, t_set).is_tiling:
        raise DomainError("(Ω, T) is not a tiling pair")
    cell_level = _gamma_or_singleton(t_set) + 1
    capacity = omega.p ** (omega.level - cell_level)
    return all(c in (0, capacity) for c in _cell_counts(omega, cell_level))


# -- search -----------------------------------------------------------------


def resolve_jobs(jobs: int | None) -> int:
    """Explicit ``jobs``, else ``$PADIC_TILES_JOBS``, else 1."""
    if jobs is None:
        raw = os.environ.get(JOBS_ENV, "").strip()
        if not raw:
            return 1
        try:
            jobs = int(raw)
        except ValueError:
            raise DomainError(f"{JOBS_ENV}={raw!r} is not an integer") from None
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    return jobs


def _complements_from(
    members: Sequence[int],
    size: int,
    covered: int,
    chosen: list[int],
    translates: Sequence[int],
    out: list[tuple[int, ...]],
) -> None:
    full = (1 << size) - 1
    if covered == full:
        out.append(tuple(sorted(chosen)))
        return
    x = (~covered & (covered + 1)).bit_length() - 1
    for w in members:
        t = (x - w) % size
        tm = translates[t]
        if not tm & covered:
            chosen.append(t)
            _complements_from(members, size, covered | tm, chosen, translates, out)
            chosen.pop()


def _first_branches(members: Sequence[int], size: int, translates: Sequence[int]) -> list[int]:
    covered = translates[0]
    if covered == (1 << size) - 1:
        return []
    x = (~covered & (covered + 1)).bit_length() - 1
    return [t for t in ((x - w) % size for w in members) if not translates[t] & covered]


def _search_branch(args: tuple[tuple[int, ...], int, int]) -> list[tuple[int, ...]]:
    members, size, t = args
    translates = _rotations(sum(1 << x for x in members), size)
    out: list[tuple[int, ...]] = []
    _complements_from(members, size, translates[0] | translates[t], [0, t], translates, out)
    return out


def _complement_tuples(members: Sequence[int], size: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """All ``T ∋ 0`` with ``Ω ⊕ T = Z/size``, as sorted tuples in lexicographic order."""
    m = len(members)
    if m == 0 or size % m:
        return []
    mask = sum(1 << x for x in members)
    translates = _rotations(mask, size)
    out: list[tuple[int, ...]] = []
    if jobs > 1:
        branches = _first_branches(members, size, translates)
        if branches:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_search_branch, [(tuple(members), size, t) for t in branches]):
                    out.extend(part)
            return sorted(out)
    _complements_from(members, size, translates[0], [0], translates, out)
    return sorted(out)


def find_complements(omega: LevelSet, jobs: int | None = None) -> list[PointSet]:
    """Every tiling complement ``T`` of ``Ω`` in ``Z/p^n`` with ``0 ∈ T``.

    Exact cover by backtracking: always cover the smallest uncovered residue
    ``x``, branching over the translates ``t ∈ x - Ω`` that fit.  Returns an
    empty list when ``|Ω|`` does not divide ``p^n``.
    """
    found = _complement_tuples(omega.members, omega.size, resolve_jobs(jobs))
    return [PointSet(omega.base, omega.level, t) for t in found]


def _count_complements(args: tuple[tuple[int, ...], int]) -> int:
    members, size = args
    return len(_complement_tuples(members, size))


def _dual_tiles(args: tuple[tuple[int, ...], int]) -> list[tuple[int, ...]]:
    members, size = args
    return _complement_tuples(members, size)


def _map(fn, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(item) for item in items]


def _tile_counts(p: int, n: int, m: int, jobs: int) -> dict[tuple[int, ...], int]:
    size = p**n
    if m < 1 or size % m:
        return {}
    q = size // m
    if m <= q:
        candidates = [(0, *rest) for rest in combinations(range(1, size), m - 1)]
        counts = _map(_count_complements, [(c, size) for c in candidates], jobs)
        return {c: k for c, k in zip(candidates, counts) if k}
    # (Ω, T) tiles iff (T, Ω) does, so enumerate the smaller side
    duals = [(0, *rest) for rest in combinations(range(1, size), q - 1)]
    tally: Counter = Counter()
    for tiles in _map(_dual_tiles, [(d, size) for d in duals], jobs):
        tally.update(tiles)
    return dict(tally)


def enumerate_tiles(
    base: PrimeBase | int, n: int, m: int, jobs: int | None = None
) -> list[tuple[LevelSet, int]]:
    """All tiles ``Ω ∋ 0`` of size ``m`` in ``Z/p^n``, with their complement counts.

    ``m`` must be a power of ``p`` up to ``p^n``; otherwise nothing tiles
    and the result is empty.  Sorted lexicographically by member list.
    """
    base = as_base(base)
    if n < 0:
        raise DomainError(f"negative level {n}")
    counts = _tile_counts(base.p, n, m, resolve_jobs(jobs))
    return [(LevelSet.from_members(base, n, members), counts[members]) for members in sorted(counts)]


@dataclass(frozen=True)
class CensusRecord:
    """One tile with all its complements.

    ``gamma_t`` is the smallest ``γ_T`` over the complements (-1 when the
    only complement is ``{0}``), and ``compact_open`` is the regularized set
    for a complement attaining it.
    """

    omega: LevelSet
    complements: tuple[PointSet, ...]
    gamma_t: int
    compact_open: CompactOpenSet = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "omega": list(self.omega.members),
            "complements": [list(t.points) for t in self.complements],
            "gamma_t": self.gamma_t,
            "compact_open": self.compact_open.to_dict(),
        }


def census_record(omega: LevelSet, complements: Iterable[PointSet]) -> CensusRecord:
    complements = tuple(complements)
    if not complements:
        raise DomainError("Ω has no tiling complement")
    best = min(complements, key=lambda t: (_gamma_or_singleton(t), t.points))
    return CensusRecord(
        omega, complements, _gamma_or_singleton(best), regularize(omega, best)
    )


def census(
    base: PrimeBase | int, n: int, m: int, jobs: int | None = None
) -> list[CensusRecord]:
    """:func:`enumerate_tiles` plus complements, ``γ_T`` and the compact open form."""
    return [
        census_record(omega, find_complements(omega))
        for omega, _ in enumerate_tiles(base, n, m, jobs)
    ]
