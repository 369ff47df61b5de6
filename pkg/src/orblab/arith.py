"""Exact integer arithmetic: factorization, p-adic valuations, radicals.

Everything here is a pure function on arbitrary-precision integers, so
unrestricted parallel use is safe.  Factorization does trial division for
small operands and Brent's cycle method with Miller-Rabin certification
for the rest; desk-scale operands (well below 2**128) never leave the
deterministic regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "PrimeFactorization",
    "factorize",
    "valuation",
    "radical",
    "is_prime",
    "primes_below",
    "smallest_factor_table",
]

# Witness set proven sufficient for every n below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 1 << 20


@dataclass(frozen=True)
class PrimeFactorization:
    """Sorted list of (prime, exponent) pairs with all exponents >= 1."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError(f"primes not strictly increasing: {self.factors}")
            if e < 1:
                raise ValueError(f"exponent < 1 in {self.factors}")
            last = p

    def __iter__(self):
        return iter(self.factors)

    def product(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


@lru_cache(maxsize=None)
def primes_below(limit: int) -> tuple[int, ...]:
    """All primes < limit, ascending."""
    if limit <= 2:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


_spf_table: list[int] = []


def smallest_factor_table(limit: int) -> list[int]:
    """Table t with t[k] = smallest prime factor of k for 2 <= k <= limit.

    Grown on demand and shared between callers; treat it as read-only.
    """
    global _spf_table
    if len(_spf_table) <= limit:
        size = max(limit + 1, 2 * len(_spf_table), 1 << 10)
        table = list(range(size))
        for p in range(2, math.isqrt(size - 1) + 1):
            if table[p] == p:
                for k in range(p * p, size, p):
                    if table[k] == k:
                        table[k] = p
        _spf_table = table
    return _spf_table


def _miller_rabin(n: int, base: int) -> bool:
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas(n: int) -> bool:
    # Selfridge parameter choice; n odd, > 5, not a perfect square.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = (k & -k).bit_length() - 1
    t = k >> s
    u, v, qk = 1, p, q
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return 1 if n == 1 else 0 if n > 1 else result


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24; adds a strong Lucas check above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if not all(_miller_rabin(n, b) for b in _MR_BASES):
        return False
    if n < _MR_PROVEN_LIMIT:
        return True
    if math.isqrt(n) ** 2 == n:
        return False
    return _strong_lucas(n)


def _brent_rho(n: int) -> int:
    # n odd composite; returns a nontrivial factor.  The polynomial offset
    # sequence is fixed, so the result is deterministic.
    for c in range(1, 128):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise ArithmeticError(f"cycle factorization failed on {n}")


def _factor_into(n: int, acc: dict[int, int]) -> None:
    # n > 1 with no prime factor below the trial cut.
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    # Perfect powers first: cycle finding can stall on them.
    for k in range(2, n.bit_length()):
        root = round(n ** (1.0 / k))
        for cand in (root - 1, root, root + 1):
            if cand > 1 and cand**k == n:
                sub: dict[int, int] = {}
                _factor_into(cand, sub)
                for p, e in sub.items():
                    acc[p] = acc.get(p, 0) + e * k
                return
    d = _brent_rho(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> PrimeFactorization:
    """Exact factorization of |n|; rejects n = 0."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    acc: dict[int, int] = {}
    if n < len(_spf_table):
        table = _spf_table
        while n > 1:
            p = table[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            acc[p] = e
        return PrimeFactorization(tuple(sorted(acc.items())))
    for p in primes_below(1 << 10):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            acc[p] = e
    if n > 1:
        if n < _TRIAL_LIMIT:
            # No factor below 2**10 survives, so n here is prime.
            acc[n] = acc.get(n, 0) + 1
        else:
            _factor_into(n, acc)
    return PrimeFactorization(tuple(sorted(acc.items())))


def valuation(n: int, p: int) -> int:
    """Largest m with p**m dividing n; n = 0 is rejected (infinite)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite; handle upstream")
    if p < 2:
        raise ValueError(f"not a prime: {p}")
    n = abs(n)
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return m


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(+-1) = 1."""
    r = 1
    for p, _ in factorize(n):
        r *= p
    return r
