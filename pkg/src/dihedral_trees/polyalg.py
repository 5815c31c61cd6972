"""Exact integer polynomial algebra.

Everything here runs on Python ints and ``fractions.Fraction``; nothing
falls back to floating point except ``eval_unit_circle``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DegenerateFamily, ZeroPolynomial
from .genset import GenSet


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial, lowest degree first.  The zero polynomial is ``(0,)``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPoly(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                             for i in range(m)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, IntPoly):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPoly((0,))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def to_json(self) -> list:
        return [int(c) if isinstance(c, int) else str(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and self.degree > 0:
                continue
            terms.append(f"{c}" if k == 0 else (f"{c}*x" if k == 1 else f"{c}*x^{k}"))
        return " + ".join(terms) if terms else "0"


def divmod_poly(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder over the rationals (coefficients become Fractions)."""
    if b.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    rem = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * max(len(rem) - b.degree, 1)
    lc = Fraction(b.lc)
    for k in range(len(rem) - 1 - b.degree, -1, -1):
        f = rem[k + b.degree] / lc
        q[k] = f
        if f:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= f * c
    return IntPoly(tuple(q)), IntPoly(tuple(rem[:max(b.degree, 1)]))


def gcd_poly(a: IntPoly, b: IntPoly) -> IntPoly:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, divmod_poly(a, b)[1]
    if a.is_zero():
        return a
    lc = Fraction(a.lc)
    return IntPoly(tuple(Fraction(c) / lc for c in a.coeffs))


@dataclass(frozen=True)
class SymmetricLaurentPoly:
    """c_0 + sum_{k>=1} c_k (z^k + z^-k), stored as ``coeffs = (c_0, ..., c_r)``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def eta(self) -> int:
        """Leading coefficient after cancellation; may be negative."""
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def laurent_terms(self) -> dict[int, int]:
        terms = {0: self.coeffs[0]}
        for k, c in enumerate(self.coeffs[1:], 1):
            if c:
                terms[k] = c
                terms[-k] = c
        return terms

    def shifted(self) -> IntPoly:
        """The ordinary polynomial z^r P(z) of degree 2r."""
        r = self.r
        full = [0] * (2 * r + 1)
        for e, c in self.laurent_terms().items():
            full[e + r] = c
        return IntPoly(tuple(full))

    def __call__(self, z):
        return self.coeffs[0] + sum(c * (z ** k + z ** -k)
                                    for k, c in enumerate(self.coeffs[1:], 1))

    def derivative_at_one(self, order: int) -> int:
        """Exact d^order/dz^order P at z = 1 from the Laurent expansion."""
        total = 0
        for e, c in self.laurent_terms().items():
            f = 1
            for i in range(order):
                f *= e - i
            total += c * f
        return total

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _laurent_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] += ca * cb
    return out


def associated_poly(gs: GenSet) -> SymmetricLaurentPoly:
    """P(z) = A(z)A(1/z) - B(z)B(1/z) with A(z) = 2s + t - sum(z^b + z^-b)
    and B(z) = -sum z^g."""
    A: dict[int, int] = defaultdict(int)
    A[0] += gs.degree
    for b in gs.betas:
        A[b] -= 1
        A[-b] -= 1
    B = {g: -1 for g in gs.gammas}
    A_inv = {-e: c for e, c in A.items()}
    B_inv = {-e: c for e, c in B.items()}
    P = _laurent_mul(A, A_inv)
    for e, c in _laurent_mul(B, B_inv).items():
        P[e] -= c
    r = max((abs(e) for e, c in P.items() if c), default=0)
    coeffs = [P.get(k, 0) for k in range(r + 1)]
    assert all(P.get(-k, 0) == coeffs[k] for k in range(r + 1))
    return SymmetricLaurentPoly(tuple(coeffs))


def q_constant(gs: GenSet) -> int:
    """q = 2t sum(beta^2) + sum_{j<k} (gamma_j - gamma_k)^2."""
    t = gs.t
    q = 2 * t * sum(b * b for b in gs.betas)
    q += sum((x - y) ** 2 for i, x in enumerate(gs.gammas) for y in gs.gammas[i + 1:])
    if q == 0:
        raise DegenerateFamily(f"{gs}: q = 0, the associated polynomial vanishes")
    return q


def chebyshev_basis(k: int) -> list[IntPoly]:
    """[T_0, ..., T_k] as integer polynomials."""
    T = [IntPoly((1,)), IntPoly((0, 1))]
    x2 = IntPoly((0, 2))
    while len(T) <= k:
        T.append(x2 * T[-1] - T[-2])
    return T[:k + 1]


def chebyshev_transform(p: SymmetricLaurentPoly) -> IntPoly:
    """Q(w) = c_0 + sum 2 c_k T_k(w), so that Q((z + 1/z)/2) = P(z)."""
    T = chebyshev_basis(p.r)
    Q = IntPoly((p.coeffs[0],))
    for k, c in enumerate(p.coeffs[1:], 1):
        Q = Q + T[k] * (2 * c)
    return Q


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b (lists low-first, deg b >= 1)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= lr * c
        r.pop()
        e -= 1
        while len(r) > 1 and r[-1] == 0:
            r.pop()
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant over the integers via the subresultant remainder sequence."""
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    A, B = list(a.coeffs), list(b.coeffs)
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da

    ca, cb = reduce(math.gcd, A), reduce(math.gcd, B)
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    tfac = ca ** db * cb ** da
    sign = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            sign = -sign
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        R = _prem(A, B)
        if not any(R):
            return 0
        A = B
        div = g * h ** delta
        B = [c // div for c in R]
        g = A[-1]
        h = g ** delta // h ** (delta - 1) if delta >= 1 else h
        if len(B) == 1:
            break
    da = len(A) - 1
    h = B[0] ** da // h ** (da - 1) if da >= 1 else h
    return sign * tfac * h


def cheb_T(n: int, x):
    """First-kind Chebyshev T_n(x) by the three-term recurrence.

    Exact for int/Fraction input; works for float and complex as well.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 1 + 0 * x, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def eval_unit_circle(p: SymmetricLaurentPoly, phi: float) -> float:
    """P(e^{i phi}) = c_0 + sum 2 c_k cos(k phi), real by symmetry."""
    return p.coeffs[0] + 2.0 * math.fsum(c * math.cos(k * phi)
                                         for k, c in enumerate(p.coeffs[1:], 1))


def bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester_matrix(a: IntPoly, b: IntPoly) -> list[list[int]]:
    da, db = a.degree, b.degree
    size = da + db
    hi_a = list(reversed(a.coeffs))
    hi_b = list(reversed(b.coeffs))
    rows = []
    for i in range(db):
        rows.append([0] * i + hi_a + [0] * (size - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + hi_b + [0] * (size - db - 1 - i))
    return rows


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of ``ff_solve``.

    ``x`` is the particular solution with every free variable set to zero,
    or None when the system is inconsistent.
    """

    x: tuple | None
    free: tuple[int, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.x is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.free


def ff_solve(m, rhs) -> LinearSolution:
    """Exact solve of a rectangular rational system.

    Rows are scaled to integers, reduced to echelon form by fraction-free
    (Bareiss) elimination, and back-substituted with Fractions.  Pivots are
    the first nonzero entry in each column, so the result is deterministic.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = []
    for row, r in zip(m, rhs):
        fr = [Fraction(v) for v in row] + [Fraction(r)]
        den = reduce(lambda x, y: x * y // math.gcd(x, y), (f.denominator for f in fr), 1)
        a.append([f.numerator * (den // f.denominator) for f in fr])
    pivots = []
    prow = 0
    prev = 1
    for c in range(cols):
        if prow == rows:
            break
        piv = next((i for i in range(prow, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        pr = a[prow]
        pc = pr[c]
        for i in range(prow + 1, rows):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, cols + 1):
                ri[j] = (ri[j] * pc - f * pr[j]) // prev
            ri[c] = 0
        # entries left of c in lower rows are already zero
        prev = pc
        pivots.append(c)
        prow += 1
    if any(a[i][cols] != 0 for i in range(prow, rows)):
        return LinearSolution(None, ())
    x = [Fraction(0)] * cols
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        acc = Fraction(a[i][cols])
        for j in pivots[i + 1:]:
            acc -= a[i][j] * x[j]
        x[c] = acc / a[i][c]
    free = tuple(c for c in range(cols) if c not in pivots)
    return LinearSolution(tuple(x), free)


def _laurent_to_sym(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


def chebyshev_identity_holds(p: SymmetricLaurentPoly) -> bool:
    """Exact check that Q((z + 1/z)/2) - P(z) is the zero Laurent polynomial."""
    Q = chebyshev_transform(p)
    half = Fraction(1, 2)
    w = {1: half, -1: half}
    acc: dict = {}
    for c in reversed(Q.coeffs):
        acc = _laurent_mul(acc, w) if acc else {}
        acc = dict(acc)
        acc[0] = acc.get(0, 0) + c
    lhs = _laurent_to_sym(acc)
    rhs = _laurent_to_sym(p.laurent_terms())
    return lhs == rhs
