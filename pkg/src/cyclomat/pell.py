"""Pell and companion Pell numbers modulo m, and the residues a_p, b_p."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ModRing, is_prime, legendre


@dataclass(frozen=True)
class PellPair:
    index: int
    P: int
    Q: int
    modulus: int


def pell_pair_mod(i: int, m: ModRing | int) -> PellPair:
    """(P_i, Q_i) mod m.

    Uses (1 + sqrt 2)^i = Q_i/2 + P_i sqrt 2 in Z[sqrt 2]/mZ, so no division
    by 2 is needed.
    """
    ring = m if isinstance(m, ModRing) else ModRing(m)
    M = ring.modulus
    if i < 0:
        raise ValueError("index must be nonnegative")
    # (a + b sqrt2)
    ra, rb = 1 % M, 0
    ba, bb = 1 % M, 1 % M
    e = i
    while e:
        if e & 1:
            ra, rb = (ra * ba + 2 * rb * bb) % M, (ra * bb + rb * ba) % M
        ba, bb = (ba * ba + 2 * bb * bb) % M, (2 * ba * bb) % M
        e >>= 1
    return PellPair(i, rb, 2 * ra % M, M)


def pell_naive(i: int) -> tuple[int, int]:
    """Exact (P_i, Q_i) by stepping the recurrence."""
    P0, P1, Q0, Q1 = 0, 1, 2, 2
    for _ in range(i):
        P0, P1 = P1, 2 * P1 + P0
        Q0, Q1 = Q1, 2 * Q1 + Q0
    return P0, Q0


def _check_p(p: int) -> None:
    if p < 7 or not is_prime(p):
        raise ValueError(f"expected a prime p >= 7, got {p}")


def _quotient(num: int, p: int) -> int:
    """(num / p) mod p for num known mod p^2; divisibility is asserted."""
    if num % p:
        raise ArithmeticError(f"{num} is not divisible by {p}")
    return num // p % p


def a_p(p: int) -> int:
    """(2 - Q_p)/p mod p."""
    _check_p(p)
    Q = pell_pair_mod(p, p * p).Q
    return _quotient((2 - Q) % (p * p), p)


def b_p(p: int) -> int:
    """(2 (2/p) - 2 P_p - p)/p mod p."""
    _check_p(p)
    P = pell_pair_mod(p, p * p).P
    return _quotient((2 * legendre(2, p) - 2 * P - p) % (p * p), p)


def predicate_qp(p: int) -> bool:
    """Q_p = 2 (mod p^2)."""
    _check_p(p)
    return pell_pair_mod(p, p * p).Q == 2 % (p * p)


def predicate_pp(p: int) -> bool:
    """2 P_p = 2 (2/p) - p (mod p^2)."""
    _check_p(p)
    pp = p * p
    P = pell_pair_mod(p, pp).P
    return (2 * P - 2 * legendre(2, p) + p) % pp == 0


PREDICATES = {"qp2": predicate_qp, "pp2": predicate_pp}
