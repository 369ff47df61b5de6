import math
import random

import pytest

from orblab.arith import (
    PrimeFactorization,
    factorize,
    is_prime,
    primes_below,
    radical,
    smallest_factor_table,
    valuation,
)


def trial_division(n):
    """Independent oracle: plain ascending trial division."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def test_factorize_small_cases():
    assert factorize(72).factors == ((2, 3), (3, 2))
    assert factorize(1).factors == ()
    assert factorize(-1).factors == ()
    assert factorize(-72).factors == ((2, 3), (3, 2))


def test_factorize_semiprime_against_trial_oracle():
    n = 600851475143
    assert factorize(n).factors == tuple(trial_division(n))
    assert factorize(n).factors == ((71, 1), (839, 1), (1471, 1), (6857, 1))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_roundtrip_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(2, 10**9)
        f = factorize(n)
        assert f.product() == n
        assert f.factors == tuple(trial_division(n))


def test_factorize_large_operand():
    n = 2**61 - 1  # Mersenne prime
    assert factorize(n).factors == ((n, 1),)
    assert factorize(n * 3).factors == ((3, 1), (n, 1))


def test_valuation_examples():
    assert valuation(72, 2) == 3
    assert valuation(72, 5) == 0
    nine_fact = math.factorial(9)
    # Count-multiples oracle for v_3(9!).
    oracle = sum(9 // 3**k for k in range(1, 9))
    assert valuation(nine_fact, 3) == oracle == 4


def test_valuation_rejects_zero():
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_valuation_matches_factorize():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(1, 10**7)
        f = factorize(n)
        for p in primes_below(50):
            assert valuation(n, p) == f.exponent_of(p)


def test_radical_cases():
    assert radical(72) == 6
    assert radical(-1) == 1
    assert radical(2**10 * 3 * 5**4) == 30


def test_radical_multiplicativity():
    rng = random.Random(13)
    for _ in range(1000):
        n = rng.randrange(1, 10**6)
        m = rng.randrange(1, 10**6)
        rn, rm, rnm = radical(n), radical(m), radical(n * m)
        assert rn * rm % rnm == 0
        if math.gcd(n, m) == 1:
            assert rnm == rn * rm


def test_factorization_type_invariants():
    with pytest.raises(ValueError):
        PrimeFactorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        PrimeFactorization(((2, 0),))


def test_is_prime_small_and_carmichael():
    assert [p for p in range(60) if is_prime(p)] == list(primes_below(60))
    assert not is_prime(561)  # Carmichael
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7 is caught
    assert is_prime(2**89 - 1)
    assert not is_prime(2**89 + 1)


def test_smallest_factor_table():
    t = smallest_factor_table(10_000)
    for k in range(2, 10_000):
        assert k % t[k] == 0
        assert is_prime(t[k])
        f = factorize(k)
        assert t[k] == f.factors[0][0]
