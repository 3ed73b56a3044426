"""Scalar layer: rationals, F_p arithmetic, primes."""

import math
import random
from fractions import Fraction

import pytest

from galoiskit.errors import Budget, ZeroInverse
from galoiskit.numbers import (
    FpElem,
    PrimeField,
    QQ,
    divisors,
    factor_integer,
    fp_inv,
    is_fermat_prime,
    is_prime,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def exhaustive_inverse(a, p):
    # independent oracle: scan all residues
    for b in range(p):
        if (a * b) % p == 1:
            return b
    return None


def test_fp_inv_examples():
    assert fp_inv(FpElem(3, 7)) == FpElem(exhaustive_inverse(3, 7), 7)
    assert fp_inv(FpElem(3, 7)).r == 5
    for p in [2, 3, 5, 97]:
        assert fp_inv(FpElem(1, p)) == FpElem(1, p)
    assert fp_inv(FpElem(2, 3)) == FpElem(2, 3)


def test_fp_inv_matches_exhaustive_search():
    for p in SMALL_PRIMES:
        for a in range(1, p):
            assert fp_inv(FpElem(a, p)).r == exhaustive_inverse(a, p)


def test_fp_inv_zero_raises():
    with pytest.raises(ZeroInverse):
        fp_inv(FpElem(0, 5))


def test_field_axioms_random_fp():
    rng = random.Random(7)
    for p in [2, 3, 5, 13, 97]:
        F = PrimeField(p)
        for _ in range(50):
            a, b, c = (F.from_int(rng.randrange(p)) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == F.zero()
            if a:
                assert a * fp_inv(a) == F.one()


def test_field_axioms_random_rationals():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = (Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * (1 / a) == 1


def test_prime_divides_binomials():
    # p | C(p, i) for all primes p <= 50 and 0 < i < p
    for p in [q for q in SMALL_PRIMES if q <= 50]:
        for i in range(1, p):
            assert math.comb(p, i) % p == 0


def test_is_prime():
    assert is_prime(65537)
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2)
    assert not is_prime(65536)
    sieve = [True] * 1000
    sieve[0] = sieve[1] = False
    for i in range(2, 1000):
        if sieve[i]:
            for j in range(2 * i, 1000, i):
                sieve[j] = False
    for n in range(1000):
        assert is_prime(n) == sieve[n]


def test_factor_integer():
    assert factor_integer(60) == [2, 2, 3, 5]
    assert factor_integer(1) == []
    assert factor_integer(97) == [97]
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 10**6)
        fs = factor_integer(n)
        prod = 1
        for f in fs:
            assert is_prime(f)
            prod *= f
        assert prod == n


def test_trial_division_cap():
    with pytest.raises(Budget):
        is_prime(10**13)
    with pytest.raises(Budget):
        factor_integer(10**13)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(97) == [1, 97]


def test_is_fermat_prime():
    assert is_fermat_prime(17)
    assert is_fermat_prime(257)
    assert is_fermat_prime(65537)
    assert not is_fermat_prime(7)
    known = {3, 5, 17, 257, 65537}
    for q in range(2, 300):
        assert is_fermat_prime(q) == (q in known)


def test_qq_coerce():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        QQ.coerce("x")


def test_fp_coerce_fraction():
    F = PrimeField(7)
    assert F.coerce(Fraction(1, 2)) == FpElem(4, 7)  # 2*4 = 8 = 1 mod 7
    with pytest.raises(ZeroInverse):
        F.coerce(Fraction(1, 7))
