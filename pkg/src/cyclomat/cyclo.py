"""Exact arithmetic in Q(zeta_m), stored in the power basis modulo Phi_m.

Coefficients are ``int`` whenever possible and ``Fraction`` otherwise; both
compare equal to their rational value, so equality is coefficient-wise.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .ff import FqCtx, FqElem


def _poly_divexact(a: list[int], b: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials, b monic."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced power-basis coordinates of zeta_m^k for k in [0, m)."""
    phi = cyclotomic_poly(m)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x, reduce by the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class CycNum:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable):
        self.m = m
        c = tuple(_norm(x) for x in coeffs)
        if len(c) != euler_phi(m):
            raise ValueError(f"expected {euler_phi(m)} coefficients, got {len(c)}")
        self.coeffs = c

    # constructors
    @classmethod
    def zero(cls, m: int) -> CycNum:
        return cls(m, [0] * euler_phi(m))

    @classmethod
    def rational(cls, m: int, r) -> CycNum:
        c = [0] * euler_phi(m)
        c[0] = r
        return cls(m, c)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycNum:
        return cls(m, _power_table(m)[k % m])

    @classmethod
    def from_exponent_counts(cls, m: int, counts: Sequence) -> CycNum:
        """sum_k counts[k] * zeta_m^k for a length-m vector of counts."""
        table = _power_table(m)
        out = [0] * euler_phi(m)
        for k, c in enumerate(counts):
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += c * t
        return cls(m, out)

    # arithmetic
    def _check(self, other: CycNum) -> None:
        if other.m != self.m:
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")

    def _lift(self, other) -> CycNum:
        if isinstance(other, CycNum):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycNum(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycNum(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.m, [a * other for a in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        d = len(self.coeffs)
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        table = _power_table(self.m)
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, t in enumerate(table[k % self.m]):
                    if t:
                        out[i] += c * t
        return CycNum(self.m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.m, [Fraction(a) / other for a in self.coeffs])
        return self * cyc_inv(other)

    def __rtruediv__(self, other):
        return cyc_inv(self) * other

    def __pow__(self, e: int) -> CycNum:
        if e < 0:
            return cyc_inv(self) ** (-e)
        result, base = CycNum.rational(self.m, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return f"CycNum(m={self.m}: {' + '.join(terms) or '0'})"

    # queries
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0])

    def galois(self, t: int) -> CycNum:
        """Image under zeta_m -> zeta_m^t, gcd(t, m) = 1."""
        if math.gcd(t, self.m) != 1:
            raise ValueError("t must be a unit mod m")
        counts = [0] * self.m
        for i, c in enumerate(self.coeffs):
            counts[i * t % self.m] += c
        return CycNum.from_exponent_counts(self.m, counts)

    def conj(self) -> CycNum:
        return self.galois(-1)

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def cyc_inv(a: CycNum) -> CycNum:
    """Inverse via the extended Euclidean algorithm with Phi_m over Q."""
    if not a:
        raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
    m = a.m
    if a.is_rational():
        return CycNum.rational(m, 1 / Fraction(a.coeffs[0]))
    r0 = [Fraction(c) for c in cyclotomic_poly(m)]
    r1 = [Fraction(c) for c in a.coeffs]
    while r1 and r1[-1] == 0:
        r1.pop()
    t0, t1 = [], [Fraction(1)]
    while len(r1) > 1:
        quo, rem = _qpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        t0, t1 = t1, _qpoly_sub(t0, _qpoly_mul(quo, t1))
    # r1 is a nonzero constant because Phi_m is irreducible
    c = r1[0]
    out = [x / c for x in t1] + [Fraction(0)] * (euler_phi(m) - len(t1))
    return CycNum(m, out)


def embed_complex(a: CycNum) -> complex:
    """Evaluate at zeta_m = exp(2 pi i / m)."""
    m = a.m
    return sum(
        (float(c) * cmath.exp(2j * math.pi * i / m) for i, c in enumerate(a.coeffs) if c),
        0j,
    )


def reduce_mod_p(a: CycNum, F: FqCtx) -> FqElem:
    """Reduction Z_(p)[zeta_{q-1}] -> F_q sending zeta_{q-1} to the generator of F."""
    if a.m != F.q - 1:
        raise ValueError(f"conductor {a.m} does not match q - 1 = {F.q - 1}")
    p = F.p
    acc = 0
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"coefficient {c} has a denominator divisible by {p}")
        r = c.numerator * pow(c.denominator, -1, p) % p
        acc = F.add(acc, F.mul(r, F.exp(i)))
    return FqElem(F, acc)
