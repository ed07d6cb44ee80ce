"""Tiling-pair fixtures shared by the tiling and acceptance tests."""

from __future__ import annotations

import random

from padic_tiles import LevelSet, PointSet, census, gamma_t


def census_pairs(p: int, max_n: int):
    """Every exact tiling pair ``(Ω, T)`` with ``0 ∈ Ω, T`` for levels ``1..max_n``."""
    for n in range(1, max_n + 1):
        for j in range(n + 1):
            for record in census(p, n, p**j):
                for t in record.complements:
                    yield record.omega, t


def gamma_of(t: PointSet) -> int:
    return gamma_t(t) if len(t) > 1 else -1


def relevel(omega: LevelSet, t: PointSet, n: int) -> tuple[LevelSet, PointSet]:
    """Describe an exact tiling pair at level ``n > γ_T``.

    Exact tiles are unions of classes mod ``p^(γ_T+1)``, so they can be
    written at any level at or above that; ``T`` stays distinct mod ``p^n``.
    """
    return omega.to_compact_open().to_level_set(n), t.with_precision(n)


def corrupt(omega: LevelSet, cell_level: int, rng: random.Random) -> LevelSet:
    """Flip a random strictly-sub-majority subset of every class mod ``p^cell_level``."""
    p, n = omega.p, omega.level
    modulus = p**cell_level
    capacity = p ** (n - cell_level)
    members = set(omega.members)
    for c in range(modulus):
        cell = [c + j * modulus for j in range(capacity)]
        k = rng.randint(0, (capacity - 1) // 2)
        for x in rng.sample(cell, k):
            members ^= {x}
    return LevelSet.from_members(omega.base, n, members)
