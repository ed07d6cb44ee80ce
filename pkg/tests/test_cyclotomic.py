import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_tiles import CyclotomicSum, DomainError
from padic_tiles.cyclotomic import add_root, is_zero, lift, to_complex


def test_add_root_examples():
    s = add_root(CyclotomicSum.zero(3, 1), 0, 1)
    assert s.coeffs == (1, 0, 0)
    s = add_root(CyclotomicSum.zero(2, 1), 3, 1)
    assert s.coeffs == (0, 1)
    t = CyclotomicSum(5, 1, (1, 2, 3, 4, 5))
    assert add_root(t, 17, 0) is t


def test_lift_examples():
    assert lift(CyclotomicSum(2, 1, (1, 1)), 2).coeffs == (1, 0, 1, 0)
    s = CyclotomicSum(3, 1, (1, 2, 3))
    assert lift(s, 1) is s
    assert lift(CyclotomicSum(3, 0, (5,)), 1).coeffs == (5, 0, 0)
    with pytest.raises(DomainError):
        lift(s, 0)


@pytest.mark.parametrize(
    "p, gamma, coeffs, expected",
    [
        (3, 1, (1, 1, 1), True),
        (2, 2, (1, 0, 1, 0), True),
        (2, 2, (1, 1, 0, 0), False),
        (2, 0, (0,), True),
        (3, 2, (Fraction(1, 3),) * 3 + (0,) * 6, False),
    ],
)
def test_is_zero_examples(p, gamma, coeffs, expected):
    assert is_zero(CyclotomicSum(p, gamma, coeffs)) is expected


@pytest.mark.parametrize(
    "p, gamma, coeffs, value",
    [(2, 1, (1, 1), 0), (2, 2, (1, 1, 0, 0), 1 + 1j), (3, 1, (2, 0, 0), 2)],
)
def test_to_complex_examples(p, gamma, coeffs, value):
    assert abs(to_complex(CyclotomicSum(p, gamma, coeffs)) - value) < 1e-12


def test_coefficient_length_and_type_checked():
    with pytest.raises(DomainError):
        CyclotomicSum(2, 2, (1, 2, 3))
    with pytest.raises(DomainError):
        CyclotomicSum(2, 1, (0.5, 0))


def test_value_equality_ignores_representation():
    assert CyclotomicSum(2, 1, (1, 1)) == CyclotomicSum.zero(2, 3)
    assert CyclotomicSum(3, 2, (0, 0, 0, 2, 0, 0, 0, 0, 0)) == CyclotomicSum(3, 1, (0, 2, 0))
    assert CyclotomicSum(3, 1, (4, 1, 1)) == 3
    assert hash(CyclotomicSum(3, 1, (4, 1, 1))) == hash(CyclotomicSum.constant(3, 3))
    assert CyclotomicSum(2, 2, (1, 1, 0, 0)) != CyclotomicSum(2, 2, (1, 0, 0, 1))
    assert CyclotomicSum(2, 2, (0, 1, 0, 0)).as_rational() is None
    assert CyclotomicSum(5, 1, (Fraction(1, 2),) * 5).as_rational() == 0


def test_conjugate():
    s = CyclotomicSum(5, 1, (1, 2, 0, 0, 7))
    assert abs(s.conjugate().to_complex() - s.to_complex().conjugate()) < 1e-12


sums = st.sampled_from([2, 3, 5]).flatmap(
    lambda p: st.integers(0, 3 if p < 5 else 2).flatmap(
        lambda g: st.lists(st.integers(-5, 5), min_size=p**g, max_size=p**g).map(
            lambda c: CyclotomicSum(p, g, tuple(c))
        )
    )
)


def _vanishing(p, gamma, rng):
    stride = p ** (gamma - 1)
    block = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(stride)]
    return CyclotomicSum(p, gamma, tuple(block[i % stride] for i in range(p**gamma)))


def test_exact_float_agreement_fuzz():
    rng = random.Random(20261016)
    for _ in range(1000):
        p = rng.choice([2, 3, 5])
        gamma = rng.randint(0, 3)
        if gamma and rng.random() < 0.4:
            s = _vanishing(p, gamma, rng)
        else:
            s = CyclotomicSum(p, gamma, tuple(rng.randint(-5, 5) for _ in range(p**gamma)))
        assert s.is_zero() == (abs(s.to_complex()) < 1e-9)


def test_rational_coefficients_against_float():
    rng = random.Random(7)
    for _ in range(300):
        p, gamma = rng.choice([(2, 3), (3, 2), (5, 1), (7, 1)])
        s = _vanishing(p, gamma, rng)
        assert s.is_zero()
        s = s.add_root(rng.randrange(p**gamma), Fraction(1, rng.randint(1, 50)))
        assert not s.is_zero()
        assert abs(s.to_complex()) > 1e-9


@given(sums, st.integers(0, 2))
def test_lift_preserves_value_and_zeroness(s, extra):
    lifted = s.lift(s.gamma + extra)
    assert abs(lifted.to_complex() - s.to_complex()) < 1e-12
    assert lifted.is_zero() == s.is_zero()
    assert lifted == s


@given(sums, sums)
def test_sum_of_vanishing_sums_vanishes(s, t):
    if s.p != t.p:
        return
    if s.is_zero() and t.is_zero():
        assert (s + t).is_zero()
    assert abs((s + t).to_complex() - (s.to_complex() + t.to_complex())) < 1e-9


@given(sums)
def test_reduced_form_is_value_preserving(s):
    r = s.reduced()
    assert r == s
    assert cmath.isclose(r.to_complex(), s.to_complex(), abs_tol=1e-9)
    assert r.reduced().coeffs == r.coeffs
