"""Square-divisibility certificate for tree counts.

For odd n, tau(n) = n t a(n)^2; for even n, tau(n) = n t delta a(n)^2,
where delta is the square-free part of
xi = (2 #odd betas + #odd gammas)(2 #odd betas + #even gammas).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FactorizationLimit, StructureViolation
from .genset import GenSet
from .polyalg import associated_poly

TRIAL_DIVISION_BOUND = 10**6


def squarefree_part(m: int) -> int:
    """Product of the primes dividing m to an odd power."""
    if m < 1:
        raise ValueError(f"squarefree_part needs m >= 1, got {m}")
    out = 1
    p = 2
    while p * p <= m:
        if p > TRIAL_DIVISION_BOUND:
            raise FactorizationLimit(f"{m} has no factor below {TRIAL_DIVISION_BOUND}")
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return out * m  # leftover m is 1 or prime


def xi_delta(gs: GenSet) -> tuple[int, int]:
    beta_odd = sum(b % 2 for b in gs.betas)
    gamma_odd = sum(g % 2 for g in gs.gammas)
    gamma_even = gs.t - gamma_odd
    xi = (2 * beta_odd + gamma_odd) * (2 * beta_odd + gamma_even)
    P = associated_poly(gs)
    p_minus_one = P.coeffs[0] + 2 * sum(c * (-1) ** k for k, c in enumerate(P.coeffs[1:], 1))
    if p_minus_one != 4 * xi:
        raise StructureViolation(f"P(-1) = {p_minus_one} but 4*xi = {4 * xi} for {gs}")
    if xi == 0:
        return 0, 0
    return xi, squarefree_part(xi)


@dataclass(frozen=True)
class ArithDecomposition:
    n: int
    xi: int
    delta: int
    a: int
    parity_case: str

    def to_dict(self) -> dict:
        return {"n": self.n, "xi": self.xi, "delta": self.delta,
                "a": str(self.a), "parity_case": self.parity_case}


def decompose(gs: GenSet, n: int, tau: int) -> ArithDecomposition:
    """Extract a(n) from tau(n); raises StructureViolation if tau has the wrong shape."""
    xi, delta = xi_delta(gs)
    odd = n % 2 == 1
    divisor = n * gs.t * (1 if odd else delta)
    if divisor == 0 or tau % divisor:
        raise StructureViolation(f"tau({n}) = {tau} is not divisible by {divisor} for {gs}")
    m = tau // divisor
    a = math.isqrt(m)
    if a * a != m:
        raise StructureViolation(f"tau({n})/{divisor} = {m} is not a perfect square for {gs}")
    return ArithDecomposition(n=n, xi=xi, delta=delta, a=a,
                              parity_case="odd" if odd else "even")
