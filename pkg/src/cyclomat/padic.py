"""Base-p digit sums and Morita's p-adic Gamma function modulo p^N."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import MODULUS_CAP, PrimePowerCtx, is_prime


@dataclass(frozen=True)
class PadicApprox:
    p: int
    N: int
    value: int

    @property
    def modulus(self) -> int:
        return self.p**self.N


def base_p_digits(r: int, p: int, f: int | None = None) -> list[int]:
    digits = []
    while r:
        r, d = divmod(r, p)
        digits.append(d)
    if f is not None:
        digits += [0] * (f - len(digits))
    return digits


def digit_sum_fractional(r: int, ctx: PrimePowerCtx) -> Fraction:
    """(p - 1) * sum_i frac(r p^i / (q - 1))."""
    q1 = ctx.q - 1
    return (ctx.p - 1) * sum((Fraction(r * ctx.p**i % q1, q1) for i in range(ctx.f)), Fraction(0))


def digit_sum(r: int, ctx: PrimePowerCtx) -> int:
    """Sum of the base-p digits of r, cross-checked against the fractional-part formula."""
    if not 0 <= r <= ctx.q - 2:
        raise ValueError(f"r must lie in [0, {ctx.q - 2}]")
    s = sum(base_p_digits(r, ctx.p))
    assert digit_sum_fractional(r, ctx) == s, "digit sum disagrees with the fractional-part formula"
    return s


def check_lemma33(ctx: PrimePowerCtx) -> bool:
    """s(n) + s(n + r) > s(r) for every r in [0, n - 1]."""
    n = ctx.n
    sn = digit_sum(n, ctx)
    return all(sn + digit_sum(n + r, ctx) > digit_sum(r, ctx) for r in range(n))


_prefix_cache: dict[tuple[int, int], list[int]] = {}


def _unit_prefix(p: int, N: int, upto: int) -> list[int]:
    """prefix[k] = product of units of [1, k] mod p^N, grown on demand."""
    key = (p, N)
    table = _prefix_cache.setdefault(key, [1])
    M = p**N
    while len(table) <= upto:
        k = len(table)
        prev = table[-1]
        table.append(prev * k % M if k % p else prev)
    return table


def _representative(x: int | Fraction, p: int, N: int) -> int:
    M = p**N
    if isinstance(x, Fraction) and x.denominator != 1:
        if (p - 1) % x.denominator:
            raise ValueError("rational arguments must have a denominator dividing p - 1")
        rep = x.numerator * pow(x.denominator, -1, M) % M
        return rep or M
    x = int(x)
    if x < 1:
        rep = x % M
        return rep or M
    return x


def gamma_p(x: int | Fraction, p: int, N: int) -> PadicApprox:
    """Gamma_p(x) mod p^N from the integer product definition.

    Nonpositive integers and rationals a/b with b | p - 1 are replaced by a
    positive integer congruent to x mod p^N.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("gamma_p needs a prime p >= 5")
    if N < 1 or p**N > MODULUS_CAP:
        raise ValueError("precision out of range")
    k = _representative(x, p, N)
    prod = _unit_prefix(p, N, k - 1)[k - 1]
    val = prod if k % 2 == 0 else -prod % p**N
    return PadicApprox(p, N, val % p**N)


def ord_p(x: int | Fraction, p: int) -> int | float:
    """p-adic valuation of a rational; inf for zero."""
    x = Fraction(x)
    if x == 0:
        return float("inf")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
