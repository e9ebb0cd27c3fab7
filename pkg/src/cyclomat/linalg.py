"""Matrix builders and determinant engines.

Three engines are kept separate on purpose: ``det_mod_p`` (elimination in a
finite field), ``det_exact`` (fraction-free Bareiss over Python integers) and
``det_complex`` (LU with partial pivoting in double precision).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from .arith import elementary_symmetric_all, legendre
from .chars import CharSpec, char_value
from .cyclo import CycNum, embed_complex
from .ff import FqCtx, FqElem, make_field

DOMAINS = ("int", "rational", "mod", "fq", "cyclo", "complex")


@dataclass
class Matrix:
    """Dense row-major matrix tagged with its scalar domain.

    ``modulus`` is p for domain ``mod`` and q for domain ``fq``.
    """

    entries: list[list[Any]]
    domain: str
    modulus: int | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}")
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def map(self, fn: Callable, domain: str, modulus: int | None = None) -> Matrix:
        return Matrix([[fn(x) for x in row] for row in self.entries], domain, modulus, dict(self.meta))

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, FqElem):
                return list(x.coeffs)
            if isinstance(x, CycNum):
                return x.to_json()
            if isinstance(x, complex):
                return [x.real, x.imag]
            return str(x)

        return {
            "domain": self.domain,
            "modulus": self.modulus,
            "rows": self.shape[0],
            "cols": self.shape[1],
            "entries": [[enc(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Matrix:
        domain, mod = obj["domain"], obj.get("modulus")
        if domain == "int":
            dec = int
        elif domain == "rational":
            dec = Fraction
        elif domain == "mod":
            dec = lambda s: int(s) % mod  # noqa: E731
        elif domain == "fq":
            F = _field_for(mod)
            dec = F.elem
        elif domain == "cyclo":
            dec = lambda o: CycNum(o["m"], [Fraction(c) for c in o["coeffs"]])  # noqa: E731
        else:
            dec = lambda v: complex(v[0], v[1])  # noqa: E731
        return cls([[dec(x) for x in row] for row in obj["entries"]], domain, mod)


def _field_for(q: int) -> FqCtx:
    from .ff import field_of_order

    return field_of_order(q)


# ---------------------------------------------------------------- builders


def build_bq(F: FqCtx, m: int) -> Matrix:
    """[(s_i + s_j)^m] for 2 <= i, j <= n over F_q."""
    if F.q < 7:
        raise ValueError("B_q(m) needs q >= 7")
    if not 0 <= m <= F.q - 1:
        raise ValueError("exponent m must lie in [0, q - 1]")
    s = [x.code for x in F.nonzero_squares()[1:]]
    rows = [[F.pow(F.add(a, b), m) for b in s] for a in s]
    return Matrix([[FqElem(F, c) for c in row] for row in rows], "fq", F.q, {"matrix": "bq", "m": m})


def _xs(F: FqCtx) -> list[int]:
    """x_i = g^(i-1), i = 1..q-1, as codes."""
    return [F.exp(i) for i in range(F.q - 1)]


def build_dq(F: FqCtx, psi: CharSpec, sign: str) -> Matrix:
    """[psi(x_j -/+ x_i)] for 2 <= i, j <= q - 1."""
    if psi.is_trivial:
        raise ValueError("D_q needs a nontrivial character")
    op = _sign_op(F, sign)
    xs = _xs(F)[1:]
    rows = [[char_value(psi, FqElem(F, op(xj, xi))) for xj in xs] for xi in xs]
    return Matrix(rows, "cyclo", None, {"matrix": f"dq{sign}", "k": psi.k})


def _sign_op(F: FqCtx, sign: str) -> Callable[[int, int], int]:
    if sign in ("-", "minus"):
        return F.sub
    if sign in ("+", "plus"):
        return F.add
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def build_circulant_psi(psi: CharSpec, sign: str) -> Matrix:
    """[psi(g^(j-i) -/+ 1)] for 0 <= i, j <= q - 2 (circulant)."""
    F = psi.F
    op = _sign_op(F, sign)
    rows = [[char_value(psi, FqElem(F, op(F.exp(j - i), 1))) for j in range(F.q - 1)] for i in range(F.q - 1)]
    return Matrix(rows, "cyclo", None, {"matrix": f"circ{sign}", "k": psi.k})


def build_carlitz(p: int, psi: CharSpec, sign: str) -> Matrix:
    """[psi(j -/+ i)] for 1 <= i, j <= p - 1 over a prime field."""
    F = psi.F
    if F.f != 1 or F.p != p:
        raise ValueError("Carlitz matrices live over the prime field F_p")
    op = _sign_op(F, sign)
    rows = [[char_value(psi, FqElem(F, op(j, i))) for j in range(1, p)] for i in range(1, p)]
    return Matrix(rows, "cyclo", None, {"matrix": f"carlitz{sign}", "k": psi.k})


def build_chapman(p: int, variant: int) -> Matrix:
    """[((i + j)/p)] with indices from ``variant`` to (p - 1)/2."""
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    idx = range(variant, (p - 1) // 2 + 1)
    return Matrix([[legendre(i + j, p) for j in idx] for i in idx], "int", None, {"matrix": f"chapman{variant}"})


def build_sun(p: int, m: int) -> Matrix:
    """[(i^2 + j^2)^m mod p] for 1 <= i, j <= (p - 1)/2."""
    idx = range(1, (p - 1) // 2 + 1)
    return Matrix([[pow(i * i + j * j, m, p) for j in idx] for i in idx], "mod", p, {"matrix": "sun", "m": m})


def build_sun_legendre(p: int) -> Matrix:
    """[((i^2 + j^2)/p)] for 1 <= i, j <= (p - 1)/2, as integers."""
    idx = range(1, (p - 1) // 2 + 1)
    return Matrix([[legendre(i * i + j * j, p) for j in idx] for i in idx], "int", None, {"matrix": "sun-legendre"})


def circulant(v: Sequence) -> list[list]:
    n = len(v)
    return [[v[(j - i) % n] for j in range(n)] for i in range(n)]


def almost_circulant(v: Sequence) -> list[list]:
    """C_n(v) with its first row and column removed."""
    n = len(v)
    return [[v[(j - i) % n] for j in range(1, n)] for i in range(1, n)]


def to_integer(M: Matrix) -> Matrix:
    """Cast a rational-valued cyclotomic matrix to integers; raises otherwise."""

    def cast(x):
        r = x.to_rational() if isinstance(x, CycNum) else Fraction(x)
        if r.denominator != 1:
            raise ValueError(f"entry {r} is not an integer")
        return r.numerator

    return M.map(cast, "int")


def to_complex(M: Matrix) -> Matrix:
    def cast(x):
        if isinstance(x, CycNum):
            return embed_complex(x)
        return complex(x)

    return M.map(cast, "complex")


# ---------------------------------------------------------------- engines


def det_mod_p(M: Matrix | Sequence[Sequence], p: int | FqCtx | None = None) -> FqElem:
    """Gaussian elimination over F_p or F_q.

    Accepts an ``fq`` matrix, a ``mod`` matrix, or a bare integer matrix
    together with the prime ``p``.
    """
    if isinstance(M, Matrix):
        if M.domain == "fq":
            F = _field_for(M.modulus)
            rows = [[x.code for x in r] for r in M.entries]
        elif M.domain in ("mod", "int"):
            mod = p if p is not None else M.modulus
            F = mod if isinstance(mod, FqCtx) else make_field(mod, 1)
            rows = [[x % F.p for x in r] for r in M.entries]
        else:
            raise TypeError(f"det_mod_p does not handle domain {M.domain!r}")
    else:
        F = p if isinstance(p, FqCtx) else make_field(p, 1)
        rows = [[x.code if isinstance(x, FqElem) else x % F.p for x in r] for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    a = [list(r) for r in rows]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return FqElem(F, 0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        pv = a[c][c]
        det = F.mul(det, pv)
        pinv = F.inv(pv)
        for r in range(c + 1, n):
            if a[r][c]:
                factor = F.mul(a[r][c], pinv)
                row_c = a[c]
                a[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(a[r], row_c)]
    return FqElem(F, det)


def det_exact(M: Matrix | Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    rows = M.entries if isinstance(M, Matrix) else M
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    a = [[int(x) for x in r] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_complex(M: Matrix | Sequence[Sequence[complex]]) -> complex:
    """LU determinant (LAPACK, partial pivoting) in double precision."""
    if isinstance(M, Matrix):
        M = to_complex(M).entries if M.domain != "complex" else M.entries
    arr = np.asarray(M, dtype=complex)
    if arr.size == 0:
        return 1 + 0j
    return complex(np.linalg.det(arr))


def is_numerically_singular(M: Matrix | Sequence[Sequence[complex]], det: complex | None = None) -> bool:
    if isinstance(M, Matrix):
        M = to_complex(M).entries if M.domain != "complex" else M.entries
    arr = np.asarray(M, dtype=complex)
    if det is None:
        det = det_complex(arr)
    norm = max(np.linalg.norm(arr, 2), 1.0)
    return abs(det) < 1e-6 * norm ** arr.shape[0]


# ---------------------------------------------------------------- closed forms


def _vandermonde_pairs(x: Sequence, y: Sequence, one):
    out = one
    m = len(x)
    for i in range(m):
        for j in range(i + 1, m):
            out = out * (x[i] - x[j]) * (y[j] - y[i])
    return out


def det_linear_kernel_formula(x: Sequence, y: Sequence, h_coeffs: Sequence, one=1):
    """Closed form of det[h(x_i + y_j)] for deg h <= m - 1.

    ``h_coeffs`` lists a_0..a_{m-1}; the result lives in the entry domain.
    """
    m = len(h_coeffs)
    if not (len(x) == len(y) == m):
        raise ValueError("x, y and h_coeffs must share one length")
    binoms = 1
    for r in range(m):
        binoms *= math.comb(m - 1, r)
    lead = h_coeffs[-1]
    return one * (lead**m) * binoms * _vandermonde_pairs(x, y, one)


def det_gsz(x: Sequence, y: Sequence, one=1):
    """Closed form of det[(x_i + y_j)^l], l = len(x)."""
    l = len(x)
    if len(y) != l:
        raise ValueError("x and y must have the same length")
    sx = elementary_symmetric_all(x, one)
    sy = elementary_symmetric_all(y, one)
    binoms = [math.comb(l, r) for r in range(l + 1)]
    total = one * 0
    for k in range(l + 1):
        rest = 1
        for r in range(l + 1):
            if r != k:
                rest *= binoms[r]
        total = total + sx[k] * sy[l - k] * rest
    vand = one
    for i in range(l):
        for j in range(i + 1, l):
            vand = vand * (x[j] - x[i]) * (y[j] - y[i])
    sign = -1 if (l * (l - 1) // 2) % 2 else 1
    return vand * total * sign


def circulant_eigenvalues(v: Sequence[complex]) -> list[complex]:
    n = len(v)
    rho = [cmath.exp(2j * math.pi * k / n) for k in range(n)]
    return [sum(v[j] * rho[l * j % n] for j in range(n)) for l in range(n)]


def circulant_eigen_det(v: Sequence, eigs: Sequence | None = None) -> tuple[Any, Any]:
    """(det C_n(v), det W_n(v)) from the circulant eigenvalues.

    Without ``eigs`` the eigenvalues are computed numerically from complex
    roots of unity.
    """
    n = len(v)
    if n < 2:
        raise ValueError("circulant size must be at least 2")
    lam = list(eigs) if eigs is not None else circulant_eigenvalues(v)
    if len(lam) != n:
        raise ValueError(f"expected {n} eigenvalues")
    det_c = lam[0]
    for x in lam[1:]:
        det_c = det_c * x
    total = 0
    for l in range(n):
        prod = 1
        for k in range(n):
            if k != l:
                prod = prod * lam[k]
        total = total + prod
    if isinstance(total, CycNum):
        return det_c, total * Fraction(1, n)
    if isinstance(total, FqElem):
        return det_c, total / n
    if isinstance(total, (int, Fraction)):
        return det_c, Fraction(total) / n
    return det_c, total / n
