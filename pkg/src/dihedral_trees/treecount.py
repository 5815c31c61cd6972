"""Spanning-tree counts of dihedral Cayley graphs by four independent routes.

``tau_exact``
    resultant of (z^n - 1)/(z - 1) and z^r P(z); exact, any n >= 1.
``tau_oracle``
    Kirchhoff cofactor determinant of the concrete Laplacian; exact,
    graph-valid n only.
``tau_spectral``
    floating product of P over the nontrivial n-th roots of unity.
``tau_chebyshev``
    floating Chebyshev closed form over the roots of the Chebyshev transform.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import (
    DegenerateFamily,
    Disconnected,
    DivisibilityViolation,
    InvalidParameters,
    RootFindingFailed,
)
from .genset import GenSet, build_graph, is_connected, laplacian, validate
from .polyalg import (
    IntPoly,
    associated_poly,
    bareiss_det,
    cheb_T,
    chebyshev_transform,
    eval_unit_circle,
    q_constant,
    resultant,
)

SPECTRAL_RTOL = 1e-9
CHEBYSHEV_RTOL = 1e-6
LOG_SPACE_THRESHOLD = 300
ROOT_RTOL = 1e-9


def _check_n(n: int):
    if n < 1:
        raise InvalidParameters(f"n must be >= 1, got {n}")


def tau_exact(gs: GenSet, n: int, check_sign: bool = False) -> int:
    """Exact tau(n) from Res((z^n-1)/(z-1), z^r P(z)).

    For disconnected instances the result is 0.  With ``check_sign`` the sign
    of t*R is compared against (-1)^(r(n-1)) as well.
    """
    _check_n(n)
    P = associated_poly(gs)
    if P.is_zero():
        raise DegenerateFamily(f"{gs}: associated polynomial is identically zero")
    ones = IntPoly((1,) * n)
    R = resultant(ones, P.shifted())
    tR = gs.t * R
    if tR % n:
        raise DivisibilityViolation(f"n={n} does not divide t*R={tR} for {gs}")
    if check_sign and tR:
        expected = -1 if (P.r * (n - 1)) % 2 else 1
        if (tR > 0) != (expected > 0):
            raise DivisibilityViolation(f"sign of t*R disagrees with (-1)^(r(n-1)) for {gs}, n={n}")
    return abs(tR) // n


def tau_oracle(gs: GenSet, n: int) -> int:
    """Matrix-tree theorem: determinant of the Laplacian minus its last row and column."""
    report = validate(gs, n)
    if not report.graph_valid:
        raise InvalidParameters(f"{gs}, n={n}: " + "; ".join(report.violations))
    L = laplacian(build_graph(gs, n))
    minor = [row[:-1] for row in L[:-1]]
    det = bareiss_det(minor)
    if det == 0:
        raise Disconnected(f"{gs} is disconnected for n={n}")
    return det


def tau_spectral(gs: GenSet, n: int) -> float:
    """(t/n) * prod_{j=1}^{n-1} P(e^{2 pi i j/n}) in floating point."""
    _check_n(n)
    P = associated_poly(gs)
    log_sum = 0.0
    sign = 1
    for j in range(1, n):
        v = eval_unit_circle(P, 2.0 * math.pi * j / n)
        if v == 0.0:
            return 0.0
        if v < 0:
            sign = -sign
        log_sum += math.log(abs(v))
    log_sum += math.log(gs.t / n)
    try:
        return sign * math.exp(log_sum)
    except OverflowError:
        return sign * math.inf


def chebyshev_roots(Q: IntPoly) -> list[complex]:
    """Roots of Q(w) other than the simple root w = 1.

    The factor (w - 1) is divided out exactly before the numerical solve.
    """
    c = list(Q.coeffs)
    if Q(1) != 0:
        raise ValueError("Q(1) != 0; not a Chebyshev transform of an associated polynomial")
    # synthetic division by (w - 1), high-first
    hi = list(reversed(c))
    quot = [hi[0]]
    for a in hi[1:-1]:
        quot.append(a + quot[-1])
    if len(quot) <= 1:
        return []
    roots = [complex(w) for w in np.roots(np.array(quot, dtype=float))]
    scale = float(sum(abs(a) for a in quot))
    for w in roots:
        m = max(1.0, abs(w)) ** (len(quot) - 1)
        resid = abs(sum(a * w ** (len(quot) - 1 - i) for i, a in enumerate(quot)))
        if resid > ROOT_RTOL * scale * m:
            raise RootFindingFailed(f"residual {resid:.3g} at claimed root {w}")
    return roots


def _log_abs_2T_minus_2(n: int, w: complex) -> float:
    """log |2 T_n(w) - 2| using z = w + sqrt(w^2 - 1), |z| >= 1."""
    z = w + cmath.sqrt(w * w - 1)
    if abs(z) < 1:
        z = 1 / z
    # 2T - 2 = z^n + z^-n - 2 = z^n (1 - z^-n)^2
    tail = abs(1 - z ** -n)
    if tail == 0.0:
        return -math.inf
    return n * math.log(abs(z)) + 2.0 * math.log(tail)


def tau_chebyshev(gs: GenSet, n: int) -> float:
    """n t |eta|^n / q * prod_p |2 T_n(w_p) - 2| over the roots w_p != 1 of Q."""
    _check_n(n)
    P = associated_poly(gs)
    q = q_constant(gs)
    roots = chebyshev_roots(chebyshev_transform(P))
    log_val = math.log(n * gs.t / q) + n * math.log(abs(P.eta))
    if n <= LOG_SPACE_THRESHOLD:
        prod = 1.0
        for w in roots:
            prod *= abs(2 * cheb_T(n, w) - 2)
        if prod == 0.0:
            return 0.0
        return math.exp(log_val) * prod
    for w in roots:
        log_val += _log_abs_2T_minus_2(n, w)
    try:
        return math.exp(log_val)
    except OverflowError:
        return math.inf


@dataclass(frozen=True)
class SpectrumPair:
    j: int
    lambda1: float
    lambda2: float


def spectrum(gs: GenSet, n: int) -> list[SpectrumPair]:
    """All 2n Laplacian eigenvalues as n pairs A(eps^j) ± |B(eps^j)|.

    A is real on the unit circle, so no imaginary part enters the square root.
    """
    _check_n(n)
    pairs = []
    for j in range(n):
        phi = 2.0 * math.pi * j / n
        a = gs.degree - 2.0 * math.fsum(math.cos(b * phi) for b in gs.betas)
        bre = math.fsum(math.cos(g * phi) for g in gs.gammas)
        bim = math.fsum(math.sin(g * phi) for g in gs.gammas)
        babs = math.hypot(bre, bim)
        if j == 0:
            pairs.append(SpectrumPair(0, 2.0 * gs.t, 0.0))
        else:
            pairs.append(SpectrumPair(j, a + babs, a - babs))
    return pairs


def spectrum_values(gs: GenSet, n: int) -> list[float]:
    return sorted(v for p in spectrum(gs, n) for v in (p.lambda1, p.lambda2))


def _rel_close(x: float, ref: int, rtol: float) -> bool:
    if ref == 0:
        return abs(x) <= 1e-6
    return abs(x - ref) <= rtol * abs(ref)


@dataclass
class TreeCountReport:
    n: int
    tau_exact: int
    tau_oracle: int | None
    tau_spectral: float
    tau_chebyshev: float | None
    engines_agree: bool
    connected: bool
    graph_valid: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tau"] = str(self.tau_exact)
        d["tau_exact"] = str(self.tau_exact)
        d["tau_oracle"] = None if self.tau_oracle is None else str(self.tau_oracle)
        # no graph exists for these parameters; only the closed form is defined
        d["formula_only"] = not self.graph_valid
        order = ["n", "tau", "tau_exact", "tau_oracle", "tau_spectral", "tau_chebyshev",
                 "engines_agree", "connected", "graph_valid", "formula_only"]
        return {k: d[k] for k in order}


def tree_count_report(gs: GenSet, n: int) -> TreeCountReport:
    """Run every applicable engine for one n and compare them."""
    exact = tau_exact(gs, n)
    connected = is_connected(gs, n)
    graph_valid = validate(gs, n).graph_valid
    oracle = None
    agree = True
    if graph_valid:
        try:
            oracle = tau_oracle(gs, n)
        except Disconnected:
            oracle = 0
        agree &= oracle == exact
    spectral = tau_spectral(gs, n)
    agree &= _rel_close(spectral, exact, SPECTRAL_RTOL)
    cheb = None
    if connected:
        cheb = tau_chebyshev(gs, n)
        agree &= _rel_close(cheb, exact, CHEBYSHEV_RTOL)
    return TreeCountReport(n=n, tau_exact=exact, tau_oracle=oracle, tau_spectral=spectral,
                           tau_chebyshev=cheb, engines_agree=bool(agree),
                           connected=connected, graph_valid=graph_valid)
