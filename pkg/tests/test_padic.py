from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_tiles import (
    Ball,
    CompactOpenSet,
    DomainError,
    Frequency,
    LevelSet,
    PAdicInt,
    PointSet,
    PrecisionError,
    PrimeBase,
    canonicalize,
    fractional_part,
    measure,
    set_algebra,
    to_level_set,
    valuation,
)

from oracles import sympy_valuation


@pytest.mark.parametrize("p, x, expected", [(2, 12, 2), (3, 1, 0), (5, Fraction(1, 25), -2)])
def test_valuation_examples(p, x, expected):
    assert valuation(x, p) == expected


def test_valuation_of_zero_is_refused():
    with pytest.raises(DomainError):
        valuation(0, 2)


def test_valuation_rejects_floats():
    with pytest.raises(DomainError):
        valuation(0.5, 2)


@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(-10**6, 10**6).filter(bool),
    st.integers(1, 10**6),
)
def test_valuation_matches_sympy(p, num, den):
    x = Fraction(num, den)
    assert valuation(x, p) == sympy_valuation(x, p)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15, -3])
def test_prime_base_rejects_non_primes(p):
    with pytest.raises(DomainError):
        PrimeBase(p)


def test_padic_int_invariants():
    assert PAdicInt(2, 0, 0).modulus == 1
    with pytest.raises(DomainError):
        PAdicInt(2, 2, 4)
    x = PAdicInt.from_int(-1, 3, 2)
    assert x.residue == 8
    assert x.digits() == (2, 2)


def test_padic_int_arithmetic_keeps_common_precision():
    a = PAdicInt.from_int(5, 2, 4)
    b = PAdicInt.from_int(3, 2, 2)
    assert a + b == PAdicInt(2, 2, 0)
    assert (a * b).precision == 2
    assert (a - 5).residue == 0
    assert a.valuation() == 0
    assert PAdicInt.from_int(12, 2, 5).valuation() == 2
    with pytest.raises(PrecisionError):
        PAdicInt.from_int(8, 2, 3).valuation()


def test_fractional_part_examples():
    half = Frequency(2, 1, 1)
    assert fractional_part(half, PAdicInt(2, 2, 1)) == (1, 1)
    assert fractional_part(half, PAdicInt(2, 2, 0)) == (1, 0)
    assert fractional_part(Frequency(2, 0), PAdicInt(2, 2, 3)) == (0, 0)


def test_frequency_rejects_non_unit():
    with pytest.raises(DomainError):
        Frequency(3, 2, 3)


def test_fractional_part_needs_enough_digits():
    with pytest.raises(PrecisionError):
        fractional_part(Frequency(2, 3, 1), PAdicInt(2, 2, 1))


def test_frequency_from_rational():
    assert Frequency.from_rational(Fraction(5, 4), 2) == Frequency(2, 2, 1)
    assert Frequency.from_rational(Fraction(3, 2), 2) == Frequency(2, 1, 1)
    assert Frequency.from_rational(Fraction(4, 3), 3) == Frequency(3, 1, 1)
    assert Frequency.from_rational(Fraction(1, 3), 2).is_trivial
    # 1/12 = 1/(4*3) over p=2: u = 3^-1 mod 4 = 3
    assert Frequency.from_rational(Fraction(1, 12), 2) == Frequency(2, 2, 3)


@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 4),
    st.integers(0, 10**4),
    st.integers(0, 10**6),
    st.integers(0, 5),
)
def test_fractional_part_depends_only_on_low_digits(p, k, u_raw, t, extra):
    u = u_raw % p**k
    if u % p == 0:
        u += 1
    xi = Frequency(p, k, u % p**k)
    n = k + extra
    a = fractional_part(xi, PAdicInt.from_int(t, p, n))
    b = fractional_part(xi, PAdicInt.from_int(t + 7 * p**k, p, n))
    assert a == b
    # and it is the rational fractional part of t*u/p^k
    assert Fraction(a[1], p ** a[0]) == Fraction(t * xi.unit, p**k) % 1


def test_measure_examples():
    assert measure(CompactOpenSet.whole(3)) == 1
    s = canonicalize([Ball(2, 2, 0), Ball(2, 2, 3)])
    assert measure(s) == Fraction(1, 2)
    assert measure(CompactOpenSet.empty(5)) == 0


def test_canonicalize_examples():
    assert canonicalize([Ball(2, 1, 0), Ball(2, 1, 1)]) == CompactOpenSet.whole(2)
    assert canonicalize([Ball(3, 1, 0), Ball(3, 2, 0)]).balls == (Ball(3, 1, 0),)
    assert canonicalize([Ball(2, 2, 3), Ball(2, 2, 0)]).balls == (Ball(2, 2, 0), Ball(2, 2, 3))


def test_canonicalize_merges_recursively():
    # the four quarter balls of 1 + 2Z_2 plus the half ball 0 + 2Z_2
    pieces = [Ball(2, 3, c) for c in (1, 3, 5, 7)] + [Ball(2, 1, 0)]
    assert canonicalize(pieces) == CompactOpenSet.whole(2)


def test_canonicalize_mixed_primes():
    with pytest.raises(DomainError):
        canonicalize([Ball(2, 1, 0), Ball(3, 1, 0)])


def test_compact_open_constructor_checks_invariants():
    with pytest.raises(DomainError):
        CompactOpenSet(2, (Ball(2, 1, 0), Ball(2, 1, 1)))
    with pytest.raises(DomainError):
        CompactOpenSet(2, (Ball(2, 1, 0), Ball(2, 2, 0)))
    with pytest.raises(DomainError):
        CompactOpenSet(2, (Ball(2, 2, 3), Ball(2, 2, 0)))


def test_to_level_set_examples():
    assert to_level_set(canonicalize([Ball(2, 1, 0)]), 2).members == (0, 2)
    assert to_level_set(CompactOpenSet.whole(3), 1).members == (0, 1, 2)
    assert to_level_set(canonicalize([Ball(2, 2, 3)]), 3).members == (3, 7)
    with pytest.raises(PrecisionError):
        to_level_set(canonicalize([Ball(2, 2, 3)]), 1)


def test_set_algebra_examples():
    half = canonicalize([Ball(2, 1, 0)])
    pair = canonicalize([Ball(2, 2, 0), Ball(2, 2, 3)])
    assert set_algebra(half, pair, "intersect").balls == (Ball(2, 2, 0),)
    assert set_algebra(pair, pair.complement(), "union") == CompactOpenSet.whole(2)
    assert set_algebra(pair, pair, "intersect") == pair
    assert set_algebra(half, pair, "difference").balls == (Ball(2, 2, 2),)
    with pytest.raises(DomainError):
        set_algebra(half, CompactOpenSet.whole(3), "union")
    with pytest.raises(DomainError):
        set_algebra(half, pair, "xor")


def test_level_set_and_point_set_invariants():
    with pytest.raises(DomainError):
        LevelSet.from_members(2, 2, [4])
    assert LevelSet.from_bits(3, [1, 0, 1]).members == (0, 2)
    assert len(LevelSet.from_members(2, 3, [0, 5]).bits) == 8
    with pytest.raises(DomainError):
        PointSet(2, 2, (2, 0))
    with pytest.raises(DomainError):
        PointSet(2, 2, ())
    with pytest.raises(PrecisionError):
        PointSet.from_points(2, 2, [0, 4])


def test_json_encodings():
    assert PointSet(2, 2, (0, 2)).to_dict() == {"p": 2, "precision": 2, "points": [0, 2]}
    assert LevelSet.from_members(2, 2, [3, 0]).to_dict() == {"p": 2, "level": 2, "members": [0, 3]}
    s = canonicalize([Ball(2, 2, 3), Ball(2, 2, 0)])
    assert s.to_dict() == {
        "p": 2,
        "balls": [{"level": 2, "center": 0}, {"level": 2, "center": 3}],
    }
    assert list(s.to_dict()) == ["p", "balls"]
    assert CompactOpenSet.from_dict(s.to_dict()) == s
    with pytest.raises(DomainError):
        LevelSet.from_dict({"p": 2, "level": 2})


# -- properties ---------------------------------------------------------------


@st.composite
def ball_lists(draw, primes=(2, 3, 5), max_level=4, max_size=8):
    p = draw(st.sampled_from(primes))
    n = draw(st.lists(st.integers(0, max_level), max_size=max_size))
    balls = [Ball(p, k, draw(st.integers(0, p**k - 1))) for k in n]
    return p, balls


def _finest(p, balls, extra=0):
    return max((b.level for b in balls), default=0) + extra


@given(ball_lists())
def test_canonicalize_is_idempotent(case):
    p, balls = case
    s = canonicalize(balls, p)
    assert canonicalize(s.balls, p) == s


@given(ball_lists())
def test_canonical_measure_matches_bit_count(case):
    p, balls = case
    s = canonicalize(balls, p)
    n = _finest(p, balls)
    union = set()
    for b in balls:
        union.update(x for x in range(p**n) if x % p**b.level == b.center)
    assert measure(s) == Fraction(len(union), p**n)
    assert set(to_level_set(s, n).members) == union


@given(ball_lists(), st.integers(0, 2))
def test_level_set_round_trip(case, extra):
    p, balls = case
    s = canonicalize(balls, p)
    n = _finest(p, balls, extra)
    ls = to_level_set(s, n)
    assert canonicalize([Ball(p, n, x) for x in ls.members], p) == s
    assert ls.to_compact_open() == s
    assert len(ls) == measure(s) * p**n


@settings(max_examples=200)
@given(ball_lists(primes=(2, 3)), st.data())
def test_inclusion_exclusion_and_algebra(case, data):
    p, balls_a = case
    k = data.draw(st.lists(st.integers(0, 4), max_size=8))
    balls_b = [Ball(p, j, data.draw(st.integers(0, p**j - 1))) for j in k]
    a, b = canonicalize(balls_a, p), canonicalize(balls_b, p)
    assert measure(a) + measure(b) == measure(a | b) + measure(a & b)
    assert measure(a - b) == measure(a) - measure(a & b)
    n = max(_finest(p, balls_a), _finest(p, balls_b))
    la, lb = set(to_level_set(a, n)), set(to_level_set(b, n))
    assert set(to_level_set(a | b, n)) == la | lb
    assert set(to_level_set(a & b, n)) == la & lb
    assert set(to_level_set(a - b, n)) == la - lb
    assert a | a.complement() == CompactOpenSet.whole(p)
    assert a & a == a
