"""Multiplicative characters of F_q and the character sums built from them.

A character is identified by an exponent ``k``: chi(g^a) = zeta_{q-1}^(k a),
chi(0) = 0.  Characters with exponent ``-s`` stand in for powers of the
Teichmueller character, whose reduction mod p is x -> x^(-s); this matches
``cyclo.reduce_mod_p`` sending zeta_{q-1} to the generator g.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycNum, cyc_inv, embed_complex
from .ff import FqCtx, FqElem


@dataclass(frozen=True)
class CharSpec:
    F: FqCtx
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % (self.F.q - 1))

    @property
    def m(self) -> int:
        return self.F.q - 1

    @property
    def order(self) -> int:
        return self.m // math.gcd(self.k, self.m)

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    def conj(self) -> CharSpec:
        return CharSpec(self.F, -self.k)

    def __mul__(self, other: CharSpec) -> CharSpec:
        return CharSpec(self.F, self.k + other.k)

    def __pow__(self, e: int) -> CharSpec:
        return CharSpec(self.F, self.k * e)

    def exponent(self, code: int) -> int | None:
        """Exponent e with chi(x) = zeta^e, or None when x = 0."""
        if code == 0:
            return None
        return self.k * self.F.log(code) % self.m

    def sign_at_minus_one(self) -> int:
        """chi(-1) in {1, -1}."""
        return -1 if self.k % 2 else 1

    def __repr__(self) -> str:
        return f"CharSpec(q={self.F.q}, k={self.k})"


def trivial(F: FqCtx) -> CharSpec:
    return CharSpec(F, 0)


def quadratic(F: FqCtx) -> CharSpec:
    return CharSpec(F, F.n)


def generator_char(F: FqCtx) -> CharSpec:
    return CharSpec(F, 1)


def nontrivial_chars(F: FqCtx) -> list[CharSpec]:
    return [CharSpec(F, k) for k in range(1, F.q - 1)]


def char_value(chi: CharSpec, x: FqElem | int) -> CycNum:
    code = x.code if isinstance(x, FqElem) else chi.F.from_int(x)
    e = chi.exponent(code)
    if e is None:
        return CycNum.zero(chi.m)
    return CycNum.zeta(chi.m, e)


def char_value_complex(chi: CharSpec, code: int) -> complex:
    e = chi.exponent(code)
    if e is None:
        return 0j
    return cmath.exp(2j * math.pi * e / chi.m)


@lru_cache(maxsize=8)
def _one_minus_table(F: FqCtx) -> tuple[tuple[int, int], ...]:
    """(log x, log(1 - x)) for x not in {0, 1}."""
    out = []
    for x in range(2, F.q):
        y = F.sub(1, x)
        out.append((F.log(x), F.log(y)))
    return tuple(out)


def jacobi_sum(psi: CharSpec, chi: CharSpec) -> CycNum:
    """J(psi, chi) = sum_x psi(x) chi(1 - x), exactly."""
    if psi.F is not chi.F:
        raise ValueError("characters over different fields")
    m = psi.m
    counts = [0] * m
    for lx, ly in _one_minus_table(psi.F):
        counts[(psi.k * lx + chi.k * ly) % m] += 1
    J = CycNum.from_exponent_counts(m, counts)
    assert J.is_integral(), "Jacobi sum with non-integer coordinates"
    return J


@lru_cache(maxsize=8)
def _trace_table(F: FqCtx) -> tuple[int, ...]:
    return tuple(F.trace_code(x) for x in range(F.q))


def gauss_sum_complex(psi: CharSpec) -> complex:
    """G(psi) = sum_x psi(x) zeta_p^Tr(x) in double precision."""
    F = psi.F
    tr = _trace_table(F)
    total = 0j
    for x in range(1, F.q):
        e = psi.exponent(x)
        total += cmath.exp(2j * math.pi * (e / psi.m + tr[x] / F.p))
    return total


@dataclass
class Lemma51Aggregates:
    A: CycNum  # exact product of the Jacobi sums
    S: CycNum
    T: CycNum

    @property
    def A_complex(self) -> complex:
        return embed_complex(self.A)


def jacobi_row(psi: CharSpec) -> list[CycNum]:
    """[J(psi, chi^r) for r in 0..q-2] with chi the generator character."""
    F = psi.F
    return [jacobi_sum(psi, CharSpec(F, r)) for r in range(F.q - 1)]


def lemma51_aggregates(psi: CharSpec) -> Lemma51Aggregates:
    """Product, plain reciprocal sum and alternating reciprocal sum of J(psi, chi^r)."""
    if psi.is_trivial:
        raise ValueError("psi must be nontrivial")
    row = jacobi_row(psi)
    m = psi.m
    A = CycNum.rational(m, 1)
    S = CycNum.zero(m)
    T = CycNum.zero(m)
    for r, J in enumerate(row):
        A = A * J
        inv = cyc_inv(J)
        S = S + inv
        T = T + inv if r % 2 == 0 else T - inv
    return Lemma51Aggregates(A, S, T)


def greene_binomial(A: CharSpec, B: CharSpec) -> CycNum:
    """Greene's binomial (A over B) = B(-1)/q * J(A, conj B)."""
    q = A.F.q
    return jacobi_sum(A, B.conj()) * Fraction(B.sign_at_minus_one(), q)


def greene_binomial_sum(psi: CharSpec) -> CycNum:
    """sum_r (psi over chi^r)^(-1), computed with exact cyclotomic inversion."""
    if psi.is_trivial:
        raise ValueError("psi must be nontrivial")
    F = psi.F
    total = CycNum.zero(psi.m)
    for r in range(F.q - 1):
        total = total + cyc_inv(greene_binomial(psi, CharSpec(F, r)))
    return total


def lambda_r(F: FqCtx, r: int) -> CycNum:
    """Circulant eigenvalue built from two Jacobi sums of Teichmueller powers."""
    n = F.n
    if not 0 <= r <= n - 1:
        raise ValueError(f"r must lie in [0, {n - 1}]")
    w = lambda s: CharSpec(F, -s)  # noqa: E731
    first = jacobi_sum(w(n), w(r)) * Fraction((-1) ** r, 2)
    second = jacobi_sum(w(n), w(n + r)) * Fraction((-1) ** (n + r), 2)
    return first + second


@dataclass
class AlphaBeta:
    alpha: CycNum
    beta: CycNum


def alpha_beta_r(psi: CharSpec, r: int) -> AlphaBeta:
    if psi.is_trivial:
        raise ValueError("psi must be nontrivial")
    J = jacobi_sum(psi, CharSpec(psi.F, r))
    return AlphaBeta(J * psi.sign_at_minus_one(), J * (-1) ** r)
