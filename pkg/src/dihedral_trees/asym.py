"""Growth constant of tau(n): the Mahler measure of the associated polynomial.

Two routes are provided.  The root route takes |eta| times the product of root
moduli above 1; the quadrature route integrates log P over the unit circle.
The root route is canonical; quadrature is a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveSample, RootFindingFailed
from .genset import GenSet, is_connected
from .polyalg import SymmetricLaurentPoly, associated_poly, q_constant
from .treecount import tau_exact

ROOT_TOL = 1e-12
ON_CIRCLE_BAND = 1e-9
DEFAULT_GRID = 2**16
# Rectangle-rule offset.  With offset 1/6 the product of 2 sin(pi (k + 1/6)/N)
# over k is exactly 1, so the log |z - 1|^2 singularity at t = 0 integrates
# without bias; offset 1/2 (midpoint) leaves a 2 log(2)/N error.
DEFAULT_OFFSET = 1.0 / 6.0


@dataclass
class MahlerEstimate:
    A_roots: float
    A_quadrature: float
    roots: list = field(default_factory=list)
    agreement: float = math.nan

    def to_dict(self) -> dict:
        return {
            "A_roots": self.A_roots,
            "A_quadrature": self.A_quadrature,
            "agreement": self.agreement,
            "roots": [[z.real, z.imag] for z in self.roots],
        }


def _divide_out_double_one(c: list[int]) -> list[int]:
    """Exact division of a high-first integer polynomial by (z - 1)^2."""
    for _ in range(2):
        quot = [c[0]]
        for a in c[1:-1]:
            quot.append(a + quot[-1])
        if quot[-1] + c[-1] != 0:
            raise RootFindingFailed("z = 1 is not a double root of z^r P(z)")
        c = quot
    return c


def _polish(coeffs: np.ndarray, z: complex, steps: int = 3) -> complex:
    d = np.polyder(coeffs)
    for _ in range(steps):
        dz = np.polyval(d, z)
        if dz == 0:
            break
        step = np.polyval(coeffs, z) / dz
        z = z - step
        if abs(step) <= 1e-17 * max(1.0, abs(z)):
            break
    return complex(z)


def find_roots(p: SymmetricLaurentPoly) -> list[complex]:
    """All 2r roots of z^r P(z), the double root 1 listed exactly."""
    hi = list(reversed(p.shifted().coeffs))
    if len(hi) < 3:
        raise ValueError("associated polynomial must be nonconstant")
    rest = _divide_out_double_one(hi)
    roots = [1 + 0j, 1 + 0j]
    if len(rest) > 1:
        coeffs = np.array(rest, dtype=float)
        scale = float(np.abs(coeffs).sum())
        for z in np.roots(coeffs):
            z = _polish(coeffs, complex(z))
            resid = abs(np.polyval(coeffs, z))
            if resid > ROOT_TOL * scale * max(1.0, abs(z)) ** (len(rest) - 1):
                raise RootFindingFailed(f"residual {resid:.3g} at claimed root {z}")
            roots.append(z)
    return roots


def mahler_quadrature(p: SymmetricLaurentPoly, grid: int = DEFAULT_GRID,
                      offset: float = DEFAULT_OFFSET) -> float:
    """exp of the rectangle rule for the integral of log P(e^{2 pi i t}) over [0, 1].

    Nodes sit at (k + offset)/grid and never touch t = 0.
    """
    if not 0.0 < offset < 1.0:
        raise ValueError("offset must lie strictly between 0 and 1")
    t = (np.arange(grid, dtype=float) + offset) / grid
    phi = 2.0 * np.pi * t
    vals = np.full(grid, float(p.coeffs[0]))
    for k, c in enumerate(p.coeffs[1:], 1):
        vals += 2.0 * c * np.cos(k * phi)
    if np.any(vals <= 0):
        bad = int(np.argmax(vals <= 0))
        raise NonPositiveSample(f"P(e^(2 pi i t)) = {vals[bad]:.3g} <= 0 at t = {t[bad]:.6g}")
    return math.exp(math.fsum(np.log(vals)) / grid)


def mahler_roots(p: SymmetricLaurentPoly, grid: int | None = DEFAULT_GRID) -> MahlerEstimate:
    """Mahler measure from the roots, with the quadrature cross-check when
    ``grid`` is given and P is positive away from z = 1."""
    roots = find_roots(p)
    log_a = math.log(abs(p.eta))
    for z in roots:
        if abs(z) > 1 + ON_CIRCLE_BAND:
            log_a += math.log(abs(z))
    a_roots = math.exp(log_a)
    a_quad = math.nan
    if grid:
        try:
            a_quad = mahler_quadrature(p, grid)
        except NonPositiveSample:
            pass
    agreement = abs(a_roots - a_quad) / a_roots
    return MahlerEstimate(A_roots=a_roots, A_quadrature=a_quad, roots=roots, agreement=agreement)


def mahler_measure(p: SymmetricLaurentPoly) -> float:
    return mahler_roots(p, grid=None).A_roots


def asymptotic_ratio(gs: GenSet, n_max: int, n_min: int = 1) -> list[tuple[int, float]]:
    """tau(n) q / (n t A^n) for connected n in [n_min, n_max], computed in log space."""
    P = associated_poly(gs)
    q = q_constant(gs)
    log_a = math.log(mahler_measure(P))
    out = []
    for n in range(n_min, n_max + 1):
        if not is_connected(gs, n):
            continue
        tau = tau_exact(gs, n)
        lr = math.log(tau) + math.log(q) - math.log(n * gs.t) - n * log_a
        out.append((n, math.exp(lr)))
    return out
