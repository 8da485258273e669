"""Closed forms, recurrences and exact integer polynomial arithmetic.

Everything here is exact: arbitrary-precision integers throughout, no
floating point.  Polynomials are kept in canonical form (no trailing zero
coefficient), serialized lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class IntPoly:
    """Univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self and other else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def coefficients(self) -> list[int]:
        """Coefficient list, lowest degree first; empty for zero."""
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "-" if c < 0 else ""
                xp = "x" if i == 1 else f"x^{i}"
                terms.append(f"{sign}{mag}{xp}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])
ONE_PLUS_X = IntPoly([1, 1])


# ---------------------------------------------------------------------------
# counting functions

def binom(a: int, b: int) -> int:
    """Exact binomial coefficient; 0 when b is out of range."""
    if a < 0:
        raise ValueError(f"binom: a must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def tri_binom(n: int, k: int) -> int:
    """Triangular binomial coefficient T(n, k) for n >= 1, 0 <= k <= n-1."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"tri_binom out of range: n={n}, k={k}")
    return binom(binom(k + 2, 2) + n - k - 2, n - k - 1)


@dataclass(frozen=True)
class CountTriangle:
    """Rows of a counting triangle; row n covers k = k_start .. k_start+len-1."""

    name: str
    k_start: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= len(self.rows):
            raise ValueError(f"row out of range: {n}")
        return self.rows[n - 1]

    def entry(self, n: int, k: int) -> int:
        r = self.row(n)
        if not self.k_start <= k < self.k_start + len(r):
            raise ValueError(f"entry out of range: n={n}, k={k}")
        return r[k - self.k_start]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)


def c_triangle(n_max: int) -> CountTriangle:
    """The triangle c_{n,k} refining the powered Catalan numbers.

    c_{1,1} = 1, c_{n,0} = 0 and
    c_{n,k} = c_{n-1,k-1} + k * sum_{j=k}^{n-1} c_{n-1,j}.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]  # c_{n-1,1} .. c_{n-1,n-1}
        suffix = [0] * (n + 1)  # suffix[k] = sum_{j>=k} c_{n-1,j}
        for k in range(n - 1, 0, -1):
            suffix[k] = suffix[k + 1] + prev[k - 1]
        row = []
        for k in range(1, n + 1):
            above = prev[k - 2] if k >= 2 else 0
            row.append(above + k * (suffix[k] if k <= n - 1 else 0))
        rows.append(tuple(row))
    return CountTriangle("cnk", 1, tuple(rows))


def t_triangle(n_max: int) -> CountTriangle:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = tuple(tuple(tri_binom(n, k) for k in range(n)) for n in range(1, n_max + 1))
    return CountTriangle("Tnk", 0, rows)


@lru_cache(maxsize=None)
def _c_rows(n_max: int) -> CountTriangle:
    return c_triangle(n_max)


def powered_catalan(n: int) -> int:
    """The n-th powered Catalan number: row sum of the c triangle."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(_c_rows(n).row(n))


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


# ---------------------------------------------------------------------------
# weight enumerator polynomials

def f_poly(k: int, i: int) -> IntPoly:
    """Closed form of the weight enumerator indexed by (k, i).

    (1+x)^C(i,2) * prod_{l=i+1}^{k} ((1+x)^l - 1); zero when i > k.
    """
    if i < 0 or k < 0:
        raise ValueError(f"f_poly out of range: k={k}, i={i}")
    if i > k:
        return ZERO
    out = ONE_PLUS_X ** binom(i, 2)
    for ell in range(i + 1, k + 1):
        out = out * (ONE_PLUS_X**ell - 1)
    return out


def f_poly_recursive(k: int, i: int) -> IntPoly:
    """Same polynomial computed purely by the defining recursion.

    f_{k+1,i} = (1+x)^{k+1-i} * sum_{j<=i} f_{k,j} - f_{k,i}, started from
    f_{0,0} = 1 and f_{k,i} = 0 for i > k.
    """
    if i < 0 or k < 0:
        raise ValueError(f"f_poly_recursive out of range: k={k}, i={i}")
    if i > k:
        return ZERO
    row = [ONE]  # row for k=0: f_{0,0}
    for kk in range(k):
        nxt = []
        for ii in range(kk + 2):
            acc = ZERO
            for j in range(ii + 1):
                fj = row[j] if j < len(row) else ZERO
                acc = acc + fj
            term = ONE_PLUS_X ** (kk + 1 - ii) * acc
            fi = row[ii] if ii < len(row) else ZERO
            nxt.append(term - fi)
        row = nxt
    return row[i]


def aztec_rhs(k: int) -> IntPoly:
    """(1 + x) raised to the triangular number C(k+1, 2), expanded."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return ONE_PLUS_X ** binom(k + 1, 2)
