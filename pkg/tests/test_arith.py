from fractions import Fraction
from math import comb, factorial, gcd

import pytest
from conftest import trial_division_is_prime
from hypothesis import given
from hypothesis import strategies as st

from cyclomat import arith
from cyclomat.arith import ModRing, PrimePowerCtx


@given(st.integers(min_value=-10, max_value=200_000))
def test_is_prime_matches_trial_division(n):
    assert arith.is_prime(n) == trial_division_is_prime(n)


def test_is_prime_large_known_values():
    assert arith.is_prime(2**61 - 1)
    assert not arith.is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not arith.is_prime(2**61 + 1)


@given(st.integers(min_value=2, max_value=50_000), st.integers(min_value=0, max_value=3000))
def test_segmented_sieve_agrees_with_simple_sieve(lo, width):
    hi = lo + width
    assert arith.primes_in_range(lo, hi) == [p for p in arith.primes_up_to(hi) if p >= lo]


def test_prime_power_ctx():
    ctx = PrimePowerCtx.from_q(243)
    assert (ctx.p, ctx.f, ctx.n) == (3, 5, 121)
    with pytest.raises(ValueError):
        PrimePowerCtx.from_q(15)
    with pytest.raises(ValueError):
        PrimePowerCtx.from_q(16)


def test_odd_prime_powers_small():
    assert arith.odd_prime_powers(3, 50) == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]


@given(st.integers(min_value=2, max_value=10**6), st.integers(), st.integers())
def test_modring_ops(m, a, b):
    R = ModRing(m)
    assert R.add(a, b) == (a + b) % m
    assert R.mul(a, b) == (a * b) % m
    if gcd(a, m) == 1:
        assert R.mul(R.inv(a), a) == 1 % m


def test_modring_fraction_and_cap():
    R = ModRing(49)
    assert R(Fraction(1, 2)) * 2 % 49 == 1
    with pytest.raises(ValueError):
        ModRing(10**14)


@given(st.sampled_from([3, 5, 7, 11, 13, 101]), st.integers(0, 500), st.integers(0, 500))
def test_lucas_binomial(p, a, b):
    assert arith.binom_mod_p(a, b, p) == comb(a, b) % p


@given(st.integers(1, 30))
def test_superfactorial(k):
    p = 1_000_003
    want = 1
    for i in range(k + 1):
        want = want * factorial(i) % p
    assert arith.superfactorial_mod(k, p) == want


def test_bernoulli_known_values():
    assert arith.bernoulli(0) == 1
    assert arith.bernoulli(1) == Fraction(-1, 2)
    assert arith.bernoulli(2) == Fraction(1, 6)
    assert arith.bernoulli(12) == Fraction(-691, 2730)
    assert arith.bernoulli(7) == 0


@pytest.mark.parametrize("p", [7, 11, 13, 23, 101])
def test_legendre_matches_euler_and_squares(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(p):
        want = 0 if a == 0 else (1 if a in squares else -1)
        assert arith.legendre(a, p) == want


def _reduced_forms(D):
    """Count reduced primitive forms ax^2+bxy+cy^2 of discriminant D < 0 by brute force."""
    count = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            count += 1
        a += 1
    return count


@pytest.mark.parametrize("p", [p for p in range(7, 400) if trial_division_is_prime(p) and p % 4 == 3])
def test_class_number_against_reduced_forms(p):
    assert arith.class_number_neg_p(p) == _reduced_forms(-p)


def test_class_number_rejects():
    with pytest.raises(ValueError):
        arith.class_number_neg_p(13)


@given(st.lists(st.integers(0, 50), max_size=7), st.integers(0, 9))
def test_elementary_symmetric_bruteforce(vals, k):
    from itertools import combinations

    p = 101
    want = 0
    for c in combinations(vals, k):
        prod = 1
        for x in c:
            prod *= x
        want += prod
    assert arith.elementary_symmetric(vals, k, p) == want % p


@pytest.mark.parametrize("n", range(1, 25))
def test_sury_identity(n):
    assert arith.sury_lhs(n) == arith.sury_rhs(n)
