"""Explicit finite fields F_{p^f} with a fixed generator and discrete-log tables.

Elements are stored internally as integer codes ``sum(c_i * p**i)`` where
``c_i`` is the coefficient of ``x**i`` in the polynomial basis.  ``FqElem``
wraps a code with its field so ordinary operators work.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .arith import PrimePowerCtx, prime_factors

TABLE_BOUND = 2**20


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """a*b reduced by the monic polynomial ``mod`` (constant term first)."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, mod, p)


def _poly_rem(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    d = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) - 1 >= d and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - d
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _poly_trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _poly_powmod(base: list[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Rabin-style test: no common factor with x^(p^i) - x for 1 <= i < deg."""
    f = len(mod) - 1
    if f == 1:
        return True
    if mod[0] % p == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(1, f):
        xp = _poly_powmod(xp, p, mod, p)
        if len(_poly_gcd(list(mod), _poly_sub(xp, x, p), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree f, low coefficients first."""
    if f == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=f):
        cand = (*low, 1)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


class FqCtx:
    """The field F_q, q = p**f, with modulus polynomial, generator and log tables."""

    def __init__(self, p: int, f: int = 1):
        self.ctx = PrimePowerCtx(p, f)
        if self.ctx.q > TABLE_BOUND:
            raise ValueError(f"q = {self.ctx.q} exceeds the log-table bound {TABLE_BOUND}")
        self.p, self.f, self.q, self.n = p, f, self.ctx.q, self.ctx.n
        self.modulus_poly = smallest_irreducible(p, f)
        self._pows = [p**i for i in range(f)]
        self.generator = self._find_generator()
        self._exp = [0] * (self.q - 1)
        self._log = [-1] * self.q
        g_poly = self.coeffs(self.generator)
        cur = [1]
        for k in range(self.q - 1):
            code = self._encode(cur)
            self._exp[k] = code
            self._log[code] = k
            cur = _poly_mulmod(cur, g_poly, self.modulus_poly, p)
        assert all(v >= 0 for v in self._log[1:]), "generator table is not a bijection"

    def __repr__(self) -> str:
        return f"FqCtx(p={self.p}, f={self.f})"

    def __reduce__(self):
        return (make_field, (self.p, self.f))

    # encoding helpers
    def _encode(self, poly: Sequence[int]) -> int:
        return sum((c % self.p) * self._pows[i] for i, c in enumerate(poly))

    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.f):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def _find_generator(self) -> int:
        p, q = self.p, self.q
        ell = prime_factors(q - 1)
        for cand in itertools.product(range(p), repeat=self.f):
            poly = _poly_trim(list(cand))
            if not poly:
                continue
            if all(_poly_powmod(poly, (q - 1) // l, self.modulus_poly, p) != [1] for l in ell):
                return self._encode(cand)
        raise AssertionError("no generator found")

    # element constructors
    def elem(self, value: int | Sequence[int]) -> FqElem:
        """Build an element from a prime-field integer or a coefficient vector."""
        if isinstance(value, int):
            return FqElem(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) > self.f:
            raise ValueError("too many coefficients")
        return FqElem(self, self._encode(coeffs))

    @property
    def zero(self) -> FqElem:
        return FqElem(self, 0)

    @property
    def one(self) -> FqElem:
        return FqElem(self, 1)

    @property
    def g(self) -> FqElem:
        return FqElem(self, self.generator)

    def elements(self) -> list[FqElem]:
        return [FqElem(self, c) for c in range(self.q)]

    # code-level arithmetic (used in hot loops)
    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.f == 1:
            return (a + b) % p
        out, m = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.f == 1:
            return -a % p
        out, m = 0, 1
        while a:
            out += (-(a % p) % p) * m
            a //= p
            m *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log base the generator; raises for zero."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def from_int(self, k: int) -> int:
        return k % self.p

    def trace_code(self, a: int) -> int:
        t, cur = 0, a
        for _ in range(self.f):
            t = self.add(t, cur)
            cur = self.pow(cur, self.p)
        assert t < self.p, "trace left the prime field"
        return t

    def trace(self, a: FqElem) -> int:
        return self.trace_code(a.code)

    def is_square_code(self, a: int) -> bool:
        return a != 0 and self._log[a] % 2 == 0

    def nonzero_squares(self) -> list[FqElem]:
        """s_1 = 1, s_2, ..., s_n with s_i = g^(2(i-1))."""
        return [FqElem(self, self._exp[2 * i]) for i in range(self.n)]

    def prime_field_value(self, a: int) -> int:
        if a >= self.p:
            raise ValueError("element is not in the prime field")
        return a


@lru_cache(maxsize=64)
def make_field(p: int, f: int = 1) -> FqCtx:
    """Deterministic, cached construction of F_{p^f}."""
    return FqCtx(p, f)


def field_of_order(q: int) -> FqCtx:
    ctx = PrimePowerCtx.from_q(q)
    return make_field(ctx.p, ctx.f)


class FqElem:
    __slots__ = ("F", "code")

    def __init__(self, F: FqCtx, code: int):
        self.F = F
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.F.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.F is not self.F:
                raise ValueError("elements from different fields")
            return other.code
        if isinstance(other, int):
            return other % self.F.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.mul(self.code, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FqElem(self.F, self.F.neg(self.code))

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.mul(self.code, self.F.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.mul(o, self.F.inv(self.code)))

    def __pow__(self, e: int):
        return FqElem(self.F, self.F.pow(self.code, e))

    def inv(self) -> FqElem:
        return FqElem(self.F, self.F.inv(self.code))

    def __eq__(self, other) -> bool:
        if isinstance(other, FqElem):
            return self.F is other.F and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.F.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.F.p, self.F.f, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        if self.F.f == 1:
            return f"{self.code} (mod {self.F.p})"
        return f"FqElem{self.coeffs}"


def mul(a: FqElem, b: FqElem) -> FqElem:
    return a * b


def add(a: FqElem, b: FqElem) -> FqElem:
    return a + b


def sub(a: FqElem, b: FqElem) -> FqElem:
    return a - b


def inv(a: FqElem) -> FqElem:
    return a.inv()


def power(a: FqElem, e: int) -> FqElem:
    return a**e


def trace(a: FqElem) -> int:
    return a.F.trace(a)


def nonzero_squares(F: FqCtx) -> list[FqElem]:
    return F.nonzero_squares()
