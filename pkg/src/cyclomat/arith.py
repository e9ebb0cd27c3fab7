"""Exact integer, rational and modular primitives shared by the rest of the package."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

# Deterministic for n < 3.3e24 (Sorenson & Webster), which covers the 63-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

MODULUS_CAP = 10**13


class NotPrimeError(ValueError):
    pass


def is_prime(x: int) -> bool:
    """Deterministic Miller-Rabin for 0 <= x < 2**63."""
    if x < 2:
        return False
    for b in _MR_BASES:
        if x % b == 0:
            return x == b
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes, primes <= limit."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Segmented sieve over [lo, hi]."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    seg = bytearray(b"\x01") * (hi - lo + 1)
    for p in primes_up_to(math.isqrt(hi)):
        start = max(p * p, (lo + p - 1) // p * p)
        if start > hi:
            continue
        seg[start - lo :: p] = bytes(len(range(start, hi + 1, p)))
    return [lo + i for i, flag in enumerate(seg) if flag]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (desk-scale n only)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _require_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise NotPrimeError(f"{p} is not an odd prime")


@dataclass(frozen=True)
class PrimePowerCtx:
    """An odd prime power q = p**f together with n = (q - 1) / 2."""

    p: int
    f: int = 1
    q: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self) -> None:
        _require_odd_prime(self.p)
        if self.f < 1:
            raise ValueError(f"exponent f must be positive, got {self.f}")
        object.__setattr__(self, "q", self.p**self.f)
        object.__setattr__(self, "n", (self.q - 1) // 2)

    @classmethod
    def from_q(cls, q: int) -> PrimePowerCtx:
        p, f = prime_power_decompose(q)
        return cls(p, f)


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p**f for an odd prime p; raise otherwise."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"{q} is not an odd prime power")
    p = prime_factors(q)
    if len(p) != 1:
        raise ValueError(f"{q} is not a prime power")
    f = 0
    r = q
    while r > 1:
        r //= p[0]
        f += 1
    return p[0], f


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    """All odd prime powers q with lo <= q <= hi, ascending."""
    out = []
    for q in range(max(lo, 3), hi + 1):
        if q % 2 and len(prime_factors(q)) == 1:
            out.append(q)
    return out


@dataclass(frozen=True)
class ModRing:
    """Integers modulo ``modulus``; the modulus is capped at 10**13."""

    modulus: int

    def __post_init__(self) -> None:
        if not 1 <= self.modulus <= MODULUS_CAP:
            raise ValueError(f"modulus {self.modulus} outside [1, {MODULUS_CAP}]")

    def __call__(self, x: int | Fraction) -> int:
        if isinstance(x, Fraction):
            return x.numerator * self.inv(x.denominator) % self.modulus
        return x % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.modulus)

    def inv(self, a: int) -> int:
        return pow(a, -1, self.modulus)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion."""
    _require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def binom_mod_p(a: int, b: int, p: int) -> int:
    """C(a, b) mod p from the base-p digits of a and b (Lucas)."""
    if b < 0 or b > a:
        return 0
    out = 1
    while a or b:
        ai, bi = a % p, b % p
        if bi > ai:
            return 0
        out = out * _small_binom(ai, bi, p) % p
        a //= p
        b //= p
    return out


@lru_cache(maxsize=None)
def _fact_table(p: int) -> tuple[int, ...]:
    t = [1] * p
    for i in range(1, p):
        t[i] = t[i - 1] * i % p
    return tuple(t)


def _small_binom(a: int, b: int, p: int) -> int:
    t = _fact_table(p)
    return t[a] * pow(t[b] * t[a - b], -1, p) % p


def factorial_mod(k: int, m: int) -> int:
    out = 1 % m
    for i in range(2, k + 1):
        out = out * i % m
    return out


def superfactorial_mod(k: int, m: int) -> int:
    """0! 1! ... k! mod m."""
    out, f = 1 % m, 1
    for i in range(1, k + 1):
        f = f * i % m
        out = out * f % m
    return out


@lru_cache(maxsize=None)
def _bernoulli_table(k: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, k + 1):
        s = sum(math.comb(m + 1, j) * b[j] for j in range(m))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k with B_1 = -1/2."""
    if not 0 <= k <= 200:
        raise ValueError("bernoulli index must lie in [0, 200]")
    return _bernoulli_table(k)[k]


def elementary_symmetric(values: Sequence[int], k: int, p: int) -> int:
    """k-th elementary symmetric polynomial of ``values`` mod p.

    sigma_0 = 1 and sigma_k = 0 for k > len(values).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > len(values):
        return 0
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] = (e[j] + e[j - 1] * v) % p
    return e[k] % p


def elementary_symmetric_all(values: Iterable, one=1) -> list:
    """All sigma_0..sigma_l of ``values`` over any commutative ring."""
    e = [one]
    for v in values:
        e.append(e[-1] * v)
        for j in range(len(e) - 2, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e


def class_number_neg_p(p: int) -> int:
    """h(-p) for a prime p = 3 (mod 4), p > 3, by the Dirichlet character sum."""
    _require_odd_prime(p)
    if p % 4 != 3 or p == 3:
        raise ValueError("class_number_neg_p needs a prime p = 3 (mod 4) with p > 3")
    s = sum(legendre(k, p) for k in range(1, (p - 1) // 2 + 1))
    h, rem = divmod(s, 2 - legendre(2, p))
    assert rem == 0 and h > 0
    return h


def sury_lhs(n: int) -> Fraction:
    return sum((Fraction(1, math.comb(n - 1, r)) for r in range(n)), Fraction(0))


def sury_rhs(n: int) -> Fraction:
    return Fraction(n, 2**n) * sum((Fraction(2**k, k) for k in range(1, n + 1)), Fraction(0))
