"""Rational generating function F(x) = sum_{n>=1} tau(n) x^n.

The denominator comes from the minimal linear recurrence of the exact
tau sequence, found by exact Hankel solves over the rationals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InsufficientTerms, NoRecurrenceFound, NonIntegerCoefficients
from .genset import GenSet
from .polyalg import IntPoly, SymmetricLaurentPoly, associated_poly, divmod_poly, ff_solve, gcd_poly
from .treecount import tau_exact

HELD_OUT = 10
SCREEN_PRIME = 2**61 - 1
# exact Hankel solves above this order take minutes on ~1000-digit terms
PRACTICAL_MAX_ORDER = 64


def _lfsr_length_mod_p(seq: list[int], p: int = SCREEN_PRIME) -> int:
    """Berlekamp-Massey linear complexity of ``seq`` over GF(p)."""
    s = [v % p for v in seq]
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for i in range(len(s)):
        d = s[i]
        for j in range(1, L + 1):
            d = (d + C[j] * s[i - j]) % p
        if d == 0:
            m += 1
            continue
        coef = d * pow(b, p - 2, p) % p
        T = list(C)
        if len(C) < len(B) + m:
            C = C + [0] * (len(B) + m - len(C))
        for j, bj in enumerate(B):
            C[j + m] = (C[j + m] - coef * bj) % p
        if 2 * L <= i:
            L, B, b, m = i + 1 - L, T, d, 1
        else:
            m += 1
    return L


def order_bound(r: int) -> int:
    """Upper bound on the recurrence order for an associated polynomial of degree r.

    tau(n) expands into n times 3^(r-1) exponentials, so the order is at most 2*3^(r-1).
    """
    return 2 * 3 ** max(r - 1, 0)


def fit_recurrence(taus, max_order: int | None = None) -> tuple[int, tuple[Fraction, ...]]:
    """Minimal L with tau(n) = sum_{i=1..L} c_i tau(n-i) on every supplied index.

    Order L is accepted when the L x L Hankel system built from the first 2L
    terms is consistent and the solution predicts all remaining terms (at
    least ``HELD_OUT`` of them).  Orders below the linear complexity mod a
    large prime are skipped without an exact solve.
    """
    taus = [int(v) for v in taus]
    N = len(taus)
    if N < 2 + HELD_OUT:
        raise InsufficientTerms(f"need at least {2 + HELD_OUT} terms, got {N}")
    avail = (N - HELD_OUT) // 2
    cap = avail if max_order is None else min(max_order, avail)
    # the integer recurrence reduces mod p, so no order below this can succeed
    start = max(1, _lfsr_length_mod_p(taus))
    for L in range(start, cap + 1):
        rows = [[taus[i - k] for k in range(1, L + 1)] for i in range(L, 2 * L)]
        rhs = taus[L:2 * L]
        sol = ff_solve(rows, rhs)
        if not sol.consistent:
            continue
        c = sol.x
        if all(sum(c[k - 1] * taus[i - k] for k in range(1, L + 1)) == taus[i]
               for i in range(2 * L, N)):
            return L, c
    if max_order is not None and max_order <= avail:
        raise NoRecurrenceFound(f"no recurrence of order <= {max_order}")
    raise InsufficientTerms(f"{N} terms only test orders up to {avail}")


def _coprime_mod_p(a: list[Fraction], b: list[Fraction], p: int = SCREEN_PRIME) -> bool:
    """Sufficient test for gcd(a, b) = 1 over Q: the gcd mod p is constant.

    Inconclusive (False) when p divides a leading coefficient or a denominator.
    """
    def red(poly):
        out = []
        for c in poly:
            if c.denominator % p == 0:
                return None
            out.append(c.numerator * pow(c.denominator, p - 2, p) % p)
        while out and out[-1] == 0:
            out.pop()
        return out

    x, y = red(a), red(b)
    if x is None or y is None or len(x) != len(_trim_frac(a)) or len(y) != len(_trim_frac(b)):
        return False
    while y:
        inv = pow(y[-1], p - 2, p)
        while len(x) >= len(y):
            f = x[-1] * inv % p
            shift = len(x) - len(y)
            for i, c in enumerate(y):
                x[shift + i] = (x[shift + i] - f * c) % p
            while x and x[-1] == 0:
                x.pop()
        x, y = y, x
    return len(x) == 1


def _trim_frac(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPoly
    denominator: IntPoly
    recurrence: tuple[Fraction, ...]
    order: int
    terms_used: int

    def series(self, count: int) -> list[int]:
        """Coefficients of x^1 .. x^count of numerator/denominator."""
        N, D = self.numerator.coeffs, self.denominator.coeffs
        d0 = D[0]
        out = []
        for k in range(count + 1):
            v = N[k] if k < len(N) else 0
            v -= sum(D[i] * out[k - i] for i in range(1, min(k, len(D) - 1) + 1))
            q, rem = divmod(v, d0)
            if rem:
                raise NonIntegerCoefficients(f"series coefficient {k} is not an integer")
            out.append(q)
        return out[1:]

    def to_dict(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator.coeffs],
            "denominator": [str(c) for c in self.denominator.coeffs],
            "recurrence": [_frac_str(c) for c in self.recurrence],
            "order": self.order,
            "terms_used": self.terms_used,
        }


def rational_gf(taus, recurrence) -> RationalGF:
    """Numerator and denominator of F with denominator(0) = 1 and gcd 1.

    ``recurrence`` is the (order, coefficients) pair from ``fit_recurrence``
    or just the coefficients.
    """
    if isinstance(recurrence, tuple) and len(recurrence) == 2 and isinstance(recurrence[0], int) \
            and not isinstance(recurrence[1], (int, Fraction)):
        order, coeffs = recurrence
    else:
        coeffs = tuple(recurrence)
        order = len(coeffs)
    coeffs = tuple(Fraction(c) for c in coeffs)
    s = [0] + [int(v) for v in taus]
    D = [Fraction(1)] + [-c for c in coeffs]
    N = [s[k] - sum(coeffs[j - 1] * s[k - j] for j in range(1, min(k, order) + 1))
         for k in range(min(order + 1, len(s)))]
    num, den = IntPoly(tuple(Fraction(v) for v in N)), IntPoly(tuple(D))
    g = IntPoly((1,))
    if not num.is_zero() and not _coprime_mod_p(list(num.coeffs), list(den.coeffs)):
        g = gcd_poly(num, den)
    if g.degree > 0:
        num = divmod_poly(num, g)[0]
        den = divmod_poly(den, g)[0]
    d0 = Fraction(den.coeffs[0])
    num_c = [Fraction(c) / d0 for c in num.coeffs]
    den_c = [Fraction(c) / d0 for c in den.coeffs]
    if any(c.denominator != 1 for c in num_c + den_c):
        raise NonIntegerCoefficients(f"reduced F has non-integer coefficients: {num_c} / {den_c}")
    return RationalGF(
        numerator=IntPoly(tuple(int(c) for c in num_c)),
        denominator=IntPoly(tuple(int(c) for c in den_c)),
        recurrence=coeffs,
        order=order,
        terms_used=len(taus),
    )


def _scaled_ints(p: IntPoly, eta: int, m: int) -> list[int]:
    # eta^m * p(y / eta), padded to degree m
    c = list(p.coeffs) + [0] * (m + 1 - len(p.coeffs))
    return [v * eta ** (m - k) for k, v in enumerate(c)]


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def verify_symmetry(gf: RationalGF, eta: int) -> bool:
    """True when F depends on x only through eta*x + 1/(eta*x).

    Equivalently H(y) = F(y/eta) satisfies H(y) = H(1/y), i.e.
    F(x) = F(1/(eta^2 x)).  Checked as an exact polynomial identity.
    """
    if eta == 0:
        raise ValueError("eta must be nonzero")
    m = max(gf.numerator.degree, gf.denominator.degree, 0)
    Nt = _scaled_ints(gf.numerator, eta, m)
    Dt = _scaled_ints(gf.denominator, eta, m)
    return _mul(Nt, Dt[::-1]) == _mul(Nt[::-1], Dt)


def tau_terms(gs: GenSet, count: int) -> list[int]:
    return [tau_exact(gs, n) for n in range(1, count + 1)]


def generating_function(gs: GenSet, terms: int | None = None,
                        max_order: int = PRACTICAL_MAX_ORDER) -> RationalGF:
    """Fit F for a family.

    With ``terms=None`` the term count doubles from 32 until a recurrence
    passes the held-out check.  Orders are searched up to ``order_bound(r)``,
    clipped to ``max_order``; families whose recurrence lies beyond the clip
    raise InsufficientTerms.
    """
    P = associated_poly(gs)
    bound = order_bound(P.r)
    cap = min(bound, max_order)

    def fit(taus):
        try:
            return rational_gf(taus, fit_recurrence(taus, max_order=cap))
        except NoRecurrenceFound:
            if cap < bound:
                raise InsufficientTerms(
                    f"recurrence order exceeds {cap} (bound {bound} for r={P.r})") from None
            raise

    if terms is not None:
        return fit(tau_terms(gs, terms))
    count = 32
    limit = 2 * cap + HELD_OUT
    while True:
        try:
            return fit(tau_terms(gs, count))
        except InsufficientTerms:
            if count >= limit:
                raise
            count = min(2 * count, limit)


def characteristic_bases(p: SymmetricLaurentPoly, roots=None) -> list[complex]:
    """Distinct exponential bases (-1)^r eta * prod z_j^{a_j}, a_j in {-1, 0, 1},
    over one root z_j from each reciprocal pair z_j, 1/z_j (z_j != 1)."""
    from .asym import find_roots

    if roots is None:
        roots = find_roots(p)
    others = [z for z in roots if abs(z - 1) > 1e-9]
    # keep one representative per (z, 1/z) pair
    reps: list[complex] = []
    used = [False] * len(others)
    for i, z in enumerate(others):
        if used[i]:
            continue
        used[i] = True
        partner = min((j for j in range(len(others)) if not used[j]),
                      key=lambda j: abs(others[j] * z - 1), default=None)
        if partner is not None:
            used[partner] = True
        reps.append(z)
    sign = -1 if p.r % 2 else 1
    bases = []
    for exps in itertools.product((-1, 0, 1), repeat=len(reps)):
        b = complex(sign * p.eta)
        for z, e in zip(reps, exps):
            b *= z ** e
        bases.append(b)
    return bases


def denominator_roots_consistent(gf: RationalGF, p: SymmetricLaurentPoly, tol: float = 1e-6) -> bool:
    """Every root of the denominator is the reciprocal of a characteristic base,
    used at most twice."""
    if gf.denominator.degree <= 0:
        return True
    roots = np.roots(np.array(list(reversed(gf.denominator.coeffs)), dtype=float))
    recips = [1 / b for b in characteristic_bases(p)]
    counts = [0] * len(recips)
    for x in roots:
        j = min(range(len(recips)), key=lambda k: abs(recips[k] - x))
        # double roots come out of the solver with ~sqrt(eps) error
        if abs(recips[j] - x) > math.sqrt(tol) * max(1.0, abs(x)):
            return False
        counts[j] += 1
    return max(counts) <= 2
