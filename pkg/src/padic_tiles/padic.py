"""Exact p-adic integers at finite precision, balls and compact open sets.

Everything here lives inside ``Z_p``.  A p-adic integer known to ``n``
digits is the residue class ``r + p^n Z_p``; a ball ``c + p^k Z_p`` is the
same object read as a set.  Compact open subsets of ``Z_p`` are finite
unions of balls and are always stored in a unique canonical form, so that
structural equality is set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Literal, Sequence

from .errors import DomainError, PrecisionError

__all__ = [
    "PrimeBase",
    "as_base",
    "valuation",
    "PAdicInt",
    "Frequency",
    "fractional_part",
    "Ball",
    "CompactOpenSet",
    "canonicalize",
    "measure",
    "to_level_set",
    "set_algebra",
    "LevelSet",
    "PointSet",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeBase:
    """The prime ``p``; validated by trial division."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise DomainError(f"prime must be an int, got {self.p!r}")
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


@lru_cache(maxsize=None)
def _base(p: int) -> PrimeBase:
    return PrimeBase(p)


def as_base(base: PrimeBase | int) -> PrimeBase:
    """Coerce an int or a :class:`PrimeBase` to a :class:`PrimeBase`."""
    if isinstance(base, PrimeBase):
        return base
    if isinstance(base, bool) or not isinstance(base, int):
        raise DomainError(f"prime must be an int, got {base!r}")
    return _base(base)


def _same_base(*items) -> PrimeBase:
    bases = {item.base for item in items}
    if len(bases) != 1:
        raise DomainError(f"mixed primes: {sorted(b.p for b in bases)}")
    return bases.pop()


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: int | Fraction, base: PrimeBase | int) -> int:
    """p-adic valuation of a nonzero rational: ``x = p^v a/b`` with ``p ∤ ab``.

    >>> valuation(12, 2)
    2
    >>> valuation(Fraction(1, 25), 5)
    -2
    """
    p = as_base(base).p
    if not isinstance(x, Rational):
        raise DomainError(f"valuation needs an exact rational, got {x!r}")
    x = Fraction(x)
    if x == 0:
        raise DomainError("valuation of 0 is +infinity")
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


@dataclass(frozen=True)
class PAdicInt:
    """A p-adic integer known modulo ``p^precision``.

    Precision 0 carries no information and has residue 0.  Arithmetic keeps
    only the digits both operands determine.
    """

    base: PrimeBase
    precision: int
    residue: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        if self.precision < 0:
            raise DomainError(f"negative precision {self.precision}")
        if not 0 <= self.residue < self.modulus:
            raise DomainError(
                f"residue {self.residue} outside [0, {self.base.p}^{self.precision})"
            )

    @classmethod
    def from_int(cls, value: int, base: PrimeBase | int, precision: int) -> PAdicInt:
        base = as_base(base)
        if precision < 0:
            raise DomainError(f"negative precision {precision}")
        return cls(base, precision, value % base.p**precision)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def modulus(self) -> int:
        return self.base.p**self.precision

    def digits(self) -> tuple[int, ...]:
        """Base-p digits, least significant first, exactly ``precision`` of them."""
        out = []
        r = self.residue
        for _ in range(self.precision):
            r, d = divmod(r, self.p)
            out.append(d)
        return tuple(out)

    def reduce(self, precision: int) -> PAdicInt:
        if precision > self.precision:
            raise PrecisionError(
                f"cannot raise precision from {self.precision} to {precision}"
            )
        return PAdicInt.from_int(self.residue, self.base, precision)

    def valuation(self) -> int:
        if self.residue == 0:
            raise PrecisionError(
                f"value is 0 mod {self.p}^{self.precision}; valuation undetermined"
            )
        return _int_valuation(self.residue, self.p)

    def _coerce(self, other: PAdicInt | int) -> tuple[int, int]:
        if isinstance(other, PAdicInt):
            _same_base(self, other)
            return other.residue, min(self.precision, other.precision)
        if isinstance(other, int):
            return other, self.precision
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: PAdicInt | int) -> PAdicInt:
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, n = coerced
        return PAdicInt.from_int(self.residue + value, self.base, n)

    __radd__ = __add__

    def __mul__(self, other: PAdicInt | int) -> PAdicInt:
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        value, n = coerced
        return PAdicInt.from_int(self.residue * value, self.base, n)

    __rmul__ = __mul__

    def __neg__(self) -> PAdicInt:
        return PAdicInt.from_int(-self.residue, self.base, self.precision)

    def __sub__(self, other: PAdicInt | int) -> PAdicInt:
        return self + (-other)

    def __rsub__(self, other: int) -> PAdicInt:
        return (-self) + other

    def __str__(self) -> str:
        return f"{self.residue} + {self.p}^{self.precision}Z_{self.p}"


@dataclass(frozen=True)
class Frequency:
    """A frequency ``ξ = u / p^k`` modulo ``Z_p``.

    Transforms of objects supported in ``Z_p`` only see ``ξ`` modulo ``Z_p``,
    so the pair ``(k, u)`` with ``p ∤ u`` is the whole state and
    ``|ξ|_p = p^k``.  Any exponent ``k <= 0`` stands for ``ξ ∈ Z_p`` and is
    stored as ``(0, 0)``.
    """

    base: PrimeBase
    exponent: int
    unit: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        if self.exponent <= 0:
            object.__setattr__(self, "exponent", 0)
            object.__setattr__(self, "unit", 0)
            return
        p = self.base.p
        if not 0 <= self.unit < p**self.exponent:
            raise DomainError(f"unit {self.unit} outside [0, {p}^{self.exponent})")
        if self.unit % p == 0:
            raise DomainError(f"unit {self.unit} is divisible by {p}")

    @classmethod
    def from_rational(cls, x: int | Fraction, base: PrimeBase | int) -> Frequency:
        """The class of a rational number modulo ``Z_p``."""
        base = as_base(base)
        x = Fraction(x)
        if x == 0 or valuation(x, base) >= 0:
            return cls(base, 0)
        k = -valuation(x, base)
        modulus = base.p**k
        cofactor = x.denominator // modulus
        unit = x.numerator * pow(cofactor, -1, modulus) % modulus
        return cls(base, k, unit)

    @classmethod
    def all_with_exponent(cls, base: PrimeBase | int, k: int) -> Iterator[Frequency]:
        """Every frequency with ``|ξ|_p = p^k`` (just ``ξ ∈ Z_p`` when ``k <= 0``)."""
        base = as_base(base)
        if k <= 0:
            yield cls(base, 0)
            return
        p = base.p
        for u in range(p**k):
            if u % p:
                yield cls(base, k, u)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def as_fraction(self) -> Fraction:
        """The representative ``u / p^k`` in ``[0, 1)``."""
        return Fraction(self.unit, self.p**self.exponent)

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        return f"{self.unit}/{self.p}^{self.exponent}"


def fractional_part(xi: Frequency, t: PAdicInt | int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``{t ξ} = m / p^k``.

    Plain ints are exact p-adic integers.  ``k`` is ``max(xi.exponent, 0)``;
    a truncated ``t`` must carry at least ``k`` digits.
    """
    k = xi.exponent
    if k == 0:
        return 0, 0
    if isinstance(t, PAdicInt):
        _same_base(xi, t)
        if t.precision < k:
            raise PrecisionError(
                f"{{t*xi}} needs t mod {xi.p}^{k}, only {t.precision} digits known"
            )
        t = t.residue
    return k, t * xi.unit % xi.p**k


@dataclass(frozen=True)
class Ball:
    """The ball ``center + p^level Z_p`` of radius and measure ``p^-level``."""

    base: PrimeBase
    level: int
    center: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        if self.level < 0:
            raise DomainError(f"ball level must be >= 0, got {self.level}")
        if not 0 <= self.center < self.base.p**self.level:
            raise DomainError(f"center {self.center} outside [0, {self.base.p}^{self.level})")

    def __repr__(self) -> str:
        return f"Ball(p={self.base.p}, level={self.level}, center={self.center})"

    @property
    def key(self) -> tuple[int, int]:
        """Canonical sort key."""
        return self.level, self.center

    @classmethod
    def around(cls, x: int, base: PrimeBase | int, level: int) -> Ball:
        base = as_base(base)
        return cls(base, level, x % base.p**level)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def measure(self) -> Fraction:
        return Fraction(1, self.p**self.level)

    def contains_point(self, x: int | PAdicInt) -> bool:
        if isinstance(x, PAdicInt):
            if x.precision < self.level:
                raise PrecisionError(f"{x} does not determine membership in {self}")
            x = x.residue
        return (x - self.center) % self.p**self.level == 0

    def contains(self, other: Ball) -> bool:
        """True when ``other`` is a subset of this ball."""
        return other.level >= self.level and other.center % self.p**self.level == self.center

    def intersects(self, other: Ball) -> bool:
        return self.contains(other) or other.contains(self)

    def parent(self) -> Ball:
        if self.level == 0:
            raise DomainError("Z_p has no parent ball inside Z_p")
        return Ball(self.base, self.level - 1, self.center % self.p ** (self.level - 1))

    def children(self) -> list[Ball]:
        step = self.p**self.level
        return [Ball(self.base, self.level + 1, self.center + j * step) for j in range(self.p)]

    def __str__(self) -> str:
        return f"B({self.center}, {self.p}^-{self.level})"


def _canonical_levels(p: int, balls: Iterable[Ball]) -> dict[int, set[int]]:
    by_level: dict[int, set[int]] = {}
    for b in balls:
        by_level.setdefault(b.level, set()).add(b.center)

    # drop balls lying inside a coarser ball
    kept: dict[int, set[int]] = {}
    for k in sorted(by_level):
        survivors = {
            c for c in by_level[k]
            if not any(c % p**j in kept[j] for j in kept)
        }
        if survivors:
            kept[k] = survivors

    # merge complete sibling families bottom-up
    k = max(kept, default=0)
    while k > 0:
        centers = kept.get(k)
        if centers:
            step = p ** (k - 1)
            families: dict[int, int] = {}
            for c in centers:
                families[c % step] = families.get(c % step, 0) + 1
            for parent, size in families.items():
                if size == p:
                    for j in range(p):
                        centers.discard(parent + j * step)
                    kept.setdefault(k - 1, set()).add(parent)
            if not centers:
                del kept[k]
        k -= 1
    return kept


def canonicalize(balls: Iterable[Ball], base: PrimeBase | int | None = None) -> CompactOpenSet:
    """Canonical form (disjoint, maximal, sorted) of a union of balls.

    ``base`` is only needed when ``balls`` may be empty.
    """
    balls = list(balls)
    bases = {b.base for b in balls}
    if base is not None:
        bases.add(as_base(base))
    if len(bases) > 1:
        raise DomainError(f"mixed primes: {sorted(b.p for b in bases)}")
    if not bases:
        raise DomainError("canonicalize of an empty list needs an explicit base")
    pb = bases.pop()
    levels = _canonical_levels(pb.p, balls)
    out = [Ball(pb, k, c) for k in sorted(levels) for c in sorted(levels[k])]
    return CompactOpenSet(pb, tuple(out))


SetOp = Literal["union", "intersect", "difference"]


@dataclass(frozen=True)
class CompactOpenSet:
    """A compact open subset of ``Z_p`` in canonical form.

    ``balls`` are pairwise disjoint, no ``p`` siblings are all present, and
    they are sorted by ``(level, center)``.  Build one with
    :func:`canonicalize`; the constructor only checks the invariants.
    """

    base: PrimeBase
    balls: tuple[Ball, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        object.__setattr__(self, "balls", tuple(self.balls))
        for b in self.balls:
            if b.base != self.base:
                raise DomainError(f"mixed primes: {b.p} in a set over {self.base.p}")
        keys = [b.key for b in self.balls]
        if keys != sorted(keys):
            raise DomainError("balls are not sorted by (level, center)")
        if len(set(self.balls)) != len(self.balls):
            raise DomainError("duplicate balls")
        p = self.base.p
        levels: dict[int, set[int]] = {}
        for b in self.balls:
            levels.setdefault(b.level, set()).add(b.center)
        for b in self.balls:
            for j, centers in levels.items():
                if j < b.level and b.center % p**j in centers:
                    raise DomainError(f"{b} overlaps a coarser ball")
        for k, centers in levels.items():
            if k == 0:
                continue
            step = p ** (k - 1)
            families: dict[int, int] = {}
            for c in centers:
                families[c % step] = families.get(c % step, 0) + 1
            if any(size == p for size in families.values()):
                raise DomainError(f"a complete sibling family at level {k} is not merged")

    @classmethod
    def empty(cls, base: PrimeBase | int) -> CompactOpenSet:
        return cls(as_base(base), ())

    @classmethod
    def whole(cls, base: PrimeBase | int) -> CompactOpenSet:
        base = as_base(base)
        return cls(base, (Ball(base, 0, 0),))

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def measure(self) -> Fraction:
        return sum((b.measure for b in self.balls), Fraction(0))

    @property
    def max_level(self) -> int:
        return max((b.level for b in self.balls), default=0)

    def __len__(self) -> int:
        return len(self.balls)

    def __iter__(self) -> Iterator[Ball]:
        return iter(self.balls)

    def __contains__(self, x: int | PAdicInt) -> bool:
        return any(b.contains_point(x) for b in self.balls)

    def contains_ball(self, ball: Ball) -> bool:
        return any(b.contains(ball) for b in self.balls)

    def union(self, other: CompactOpenSet) -> CompactOpenSet:
        _same_base(self, other)
        return canonicalize(self.balls + other.balls, self.base)

    def intersection(self, other: CompactOpenSet) -> CompactOpenSet:
        _same_base(self, other)
        pieces = []
        for a in self.balls:
            for b in other.balls:
                if a.contains(b):
                    pieces.append(b)
                elif b.contains(a):
                    pieces.append(a)
        return canonicalize(pieces, self.base)

    def difference(self, other: CompactOpenSet) -> CompactOpenSet:
        _same_base(self, other)
        pieces: list[Ball] = []
        for a in self.balls:
            pieces.extend(_subtract(a, [b for b in other.balls if a.intersects(b)]))
        return canonicalize(pieces, self.base)

    def complement(self) -> CompactOpenSet:
        """Complement inside ``Z_p``."""
        return CompactOpenSet.whole(self.base).difference(self)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def to_level_set(self, n: int) -> LevelSet:
        if n < self.max_level:
            raise PrecisionError(
                f"level {n} is coarser than the finest ball (level {self.max_level})"
            )
        p = self.p
        mask = 0
        for b in self.balls:
            step = p**b.level
            for j in range(p ** (n - b.level)):
                mask |= 1 << (b.center + j * step)
        return LevelSet(self.base, n, mask)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "balls": [{"level": b.level, "center": b.center} for b in self.balls],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CompactOpenSet:
        p = _field(data, "p", int)
        raw = _field(data, "balls", list)
        balls = []
        for item in raw:
            if not isinstance(item, dict):
                raise DomainError(f"ball entry must be an object, got {item!r}")
            balls.append(Ball(p, _field(item, "level", int), _field(item, "center", int)))
        return canonicalize(balls, p)

    def __str__(self) -> str:
        if not self.balls:
            return "∅"
        return " ∪ ".join(str(b) for b in self.balls)


def _subtract(ball: Ball, holes: Sequence[Ball]) -> list[Ball]:
    if any(h.contains(ball) for h in holes):
        return []
    if not holes:
        return [ball]
    out = []
    for child in ball.children():
        out.extend(_subtract(child, [h for h in holes if child.intersects(h)]))
    return out


def measure(s: CompactOpenSet) -> Fraction:
    """Haar measure with ``m(Z_p) = 1``."""
    return s.measure


def to_level_set(s: CompactOpenSet, n: int) -> LevelSet:
    return s.to_level_set(n)


def set_algebra(a: CompactOpenSet, b: CompactOpenSet, op: SetOp) -> CompactOpenSet:
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersection(b)
    if op == "difference":
        return a.difference(b)
    raise DomainError(f"unknown set operation {op!r}")


@dataclass(frozen=True)
class LevelSet:
    """A subset of ``Z/p^n Z``, i.e. a union of level-``n`` balls.

    ``mask`` is the characteristic bit vector: bit ``x`` is set iff the
    residue ``x`` is a member.
    """

    base: PrimeBase
    level: int
    mask: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        if self.level < 0:
            raise DomainError(f"negative level {self.level}")
        if self.mask < 0 or self.mask >> self.size:
            raise DomainError(f"mask has bits outside [0, {self.base.p}^{self.level})")

    @classmethod
    def from_members(
        cls, base: PrimeBase | int, level: int, members: Iterable[int]
    ) -> LevelSet:
        base = as_base(base)
        size = base.p**level
        mask = 0
        for x in members:
            if not 0 <= x < size:
                raise DomainError(f"member {x} outside [0, {base.p}^{level})")
            mask |= 1 << x
        return cls(base, level, mask)

    @classmethod
    def from_bits(cls, base: PrimeBase | int, bits: Sequence[bool | int]) -> LevelSet:
        base = as_base(base)
        level = 0
        while base.p**level < len(bits):
            level += 1
        if base.p**level != len(bits):
            raise DomainError(f"bit vector length {len(bits)} is not a power of {base.p}")
        return cls.from_members(base, level, (i for i, b in enumerate(bits) if b))

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def size(self) -> int:
        """``p^level``, the length of the bit vector."""
        return self.base.p**self.level

    @cached_property
    def members(self) -> tuple[int, ...]:
        m, out, x = self.mask, [], 0
        while m:
            if m & 1:
                out.append(x)
            m >>= 1
            x += 1
        return tuple(out)

    @property
    def bits(self) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> x & 1) for x in range(self.size))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.size and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    @property
    def measure(self) -> Fraction:
        return Fraction(len(self), self.size)

    def translate(self, t: int) -> LevelSet:
        n = self.size
        return LevelSet.from_members(self.base, self.level, ((x + t) % n for x in self.members))

    def lift(self, n: int) -> LevelSet:
        """The same subset of ``Z_p`` described at a finer level ``n``."""
        if n < self.level:
            raise PrecisionError(f"cannot lift level {self.level} down to {n}")
        step = self.size
        return LevelSet.from_members(
            self.base,
            n,
            (x + j * step for x in self.members for j in range(self.p ** (n - self.level))),
        )

    def to_compact_open(self) -> CompactOpenSet:
        return canonicalize((Ball(self.base, self.level, x) for x in self.members), self.base)

    def to_dict(self) -> dict:
        return {"p": self.p, "level": self.level, "members": list(self.members)}

    @classmethod
    def from_dict(cls, data: dict) -> LevelSet:
        members = _field(data, "members", list)
        if any(isinstance(x, bool) or not isinstance(x, int) for x in members):
            raise DomainError("members must be integers")
        if len(set(members)) != len(members):
            raise DomainError("duplicate members")
        return cls.from_members(_field(data, "p", int), _field(data, "level", int), members)

    def __str__(self) -> str:
        return f"{{{', '.join(map(str, self.members))}}} ⊂ Z/{self.p}^{self.level}"


@dataclass(frozen=True)
class PointSet:
    """A finite set of distinct points of ``Z_p`` known modulo ``p^precision``.

    Used for tiling complements.  Points are sorted residues in
    ``[0, p^precision)``.
    """

    base: PrimeBase
    precision: int
    points: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_base(self.base))
        object.__setattr__(self, "points", tuple(self.points))
        if self.precision < 1:
            raise DomainError(f"point set precision must be >= 1, got {self.precision}")
        if not self.points:
            raise DomainError("point set must be nonempty")
        modulus = self.base.p**self.precision
        if any(not 0 <= t < modulus for t in self.points):
            raise DomainError(f"points must lie in [0, {self.base.p}^{self.precision})")
        if any(a >= b for a, b in zip(self.points, self.points[1:])):
            raise DomainError("points must be strictly increasing")

    @classmethod
    def from_points(
        cls, base: PrimeBase | int, precision: int, points: Iterable[int]
    ) -> PointSet:
        """Reduce mod ``p^precision`` and sort; coinciding residues are an error."""
        base = as_base(base)
        modulus = base.p**precision
        reduced = [t % modulus for t in points]
        if len(set(reduced)) != len(reduced):
            raise PrecisionError(
                f"points coincide modulo {base.p}^{precision}; they are not distinct"
            )
        return cls(base, precision, tuple(sorted(reduced)))

    @property
    def p(self) -> int:
        return self.base.p

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    @cached_property
    def max_pair_valuation(self) -> int:
        """Largest valuation of ``t - t'`` over distinct points; -1 for a singleton."""
        p = self.base.p
        pts = self.points
        best = -1
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                v = _int_valuation(b - a, p)
                if v > best:
                    best = v
        return best

    def elements(self) -> list[PAdicInt]:
        return [PAdicInt(self.base, self.precision, t) for t in self.points]

    def with_precision(self, n: int) -> PointSet:
        """Re-read the points at precision ``n``.

        Raising the precision appends zero digits (the points are the same
        integers); lowering it reduces and fails if points collide.
        """
        if n >= self.precision:
            return PointSet(self.base, n, self.points)
        return PointSet.from_points(self.base, n, self.points)

    def to_dict(self) -> dict:
        return {"p": self.p, "precision": self.precision, "points": list(self.points)}

    @classmethod
    def from_dict(cls, data: dict) -> PointSet:
        points = _field(data, "points", list)
        if any(isinstance(x, bool) or not isinstance(x, int) for x in points):
            raise DomainError("points must be integers")
        if len(set(points)) != len(points):
            raise DomainError("duplicate points")
        return cls(_field(data, "p", int), _field(data, "precision", int), tuple(sorted(points)))

    def __str__(self) -> str:
        return f"{{{', '.join(map(str, self.points))}}} mod {self.p}^{self.precision}"


def _field(data: dict, key: str, kind: type):
    if not isinstance(data, dict):
        raise DomainError(f"expected a JSON object, got {type(data).__name__}")
    if key not in data:
        raise DomainError(f"missing field {key!r}")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, kind):
        raise DomainError(f"field {key!r} must be {kind.__name__}, got {value!r}")
    return value

