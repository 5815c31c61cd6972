"""Cross-engine and property sweep for one generating set."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import decompose, xi_delta
from .asym import find_roots, mahler_roots
from .errors import DihedralTreesError
from .genfun import (
    PRACTICAL_MAX_ORDER,
    denominator_roots_consistent,
    generating_function,
    order_bound,
    tau_terms,
    verify_symmetry,
)
from .genset import GenSet, build_graph, is_connected, laplacian, validate
from .polyalg import associated_poly, chebyshev_identity_holds, q_constant
from .treecount import spectrum, spectrum_values, tree_count_report

SPECTRUM_ATOL = 1e-8
DENSE_SPECTRUM_MAX_N = 12
MAHLER_RTOL = 1e-5


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    skipped: bool = False

    def line(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.ok else "FAIL")
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _guard(name, fn):
    try:
        ok, detail = fn()
    except DihedralTreesError as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, bool(ok), detail)


def polynomial_checks(gs: GenSet) -> list[CheckResult]:
    P = associated_poly(gs)
    out = []

    def at_one():
        q = q_constant(gs)
        vals = (P.derivative_at_one(0), P.derivative_at_one(1), P.derivative_at_one(2))
        return vals == (0, 0, -2 * q), f"P(1), P'(1), P''(1) = {vals}, q = {q}"

    out.append(_guard("P(1)=P'(1)=0, P''(1)=-2q", at_one))
    out.append(_guard("Q((z+1/z)/2) = P(z)",
                      lambda: (chebyshev_identity_holds(P), "")))

    def pm1():
        xi, delta = xi_delta(gs)
        return True, f"xi={xi}, delta={delta}"

    out.append(_guard("P(-1) = 4 xi", pm1))
    return out


def instance_checks(gs: GenSet, n: int) -> list[CheckResult]:
    out = []
    tag = f"n={n}"
    valid = validate(gs, n).graph_valid
    connected = is_connected(gs, n)
    if valid:
        g = build_graph(gs, n)
        out.append(CheckResult(f"{tag} gcd criterion = BFS connectivity",
                               g.is_connected() == connected))
    report = tree_count_report(gs, n)
    out.append(CheckResult(f"{tag} engines agree", report.engines_agree,
                           f"tau={report.tau_exact}"))
    if connected:
        out.append(CheckResult(f"{tag} tau/(n t) integral",
                               report.tau_exact % (n * gs.t) == 0))
        out.append(_guard(f"{tag} square decomposition",
                          lambda: (True, f"a={decompose(gs, n, report.tau_exact).a}")))
        pairs = spectrum(gs, n)
        prod = pairs[0].lambda1 / (2 * n) * math.prod(p.lambda1 * p.lambda2 for p in pairs[1:])
        ok = abs(prod - report.tau_exact) <= 1e-8 * report.tau_exact
        out.append(CheckResult(f"{tag} Kirchhoff product of spectrum", ok, f"{prod:.12g}"))
    if valid and n <= DENSE_SPECTRUM_MAX_N:
        dense = np.linalg.eigvalsh(np.array(laplacian(build_graph(gs, n)), dtype=float))
        gap = float(np.max(np.abs(np.sort(dense) - np.array(spectrum_values(gs, n)))))
        out.append(CheckResult(f"{tag} spectrum = dense eigensolve", gap < SPECTRUM_ATOL,
                               f"max gap {gap:.3g}"))
    return out


def asymptotic_checks(gs: GenSet) -> list[CheckResult]:
    P = associated_poly(gs)
    if P.r == 0:
        return []
    out = []
    if gs.gcd_parameters() == 1:
        def mahler():
            est = mahler_roots(P)
            return est.agreement < MAHLER_RTOL, f"A={est.A_roots:.12g}, gap {est.agreement:.3g}"
        out.append(_guard("Mahler measure: roots vs quadrature", mahler))

    def pairing():
        roots = find_roots(P)
        ok = all(min(abs(z * w - 1) for w in roots) < 1e-6 for z in roots)
        ones = sum(abs(z - 1) < 1e-9 for z in roots)
        return ok and ones >= 2, f"{len(roots)} roots"

    out.append(_guard("roots pair as (z, 1/z) with double root 1", pairing))
    return out


def genfun_checks(gs: GenSet, extra: int = 20) -> list[CheckResult]:
    P = associated_poly(gs)
    out = []
    if order_bound(P.r) > PRACTICAL_MAX_ORDER:
        return [CheckResult("rational generating function", True,
                            f"order bound {order_bound(P.r)} exceeds {PRACTICAL_MAX_ORDER}",
                            skipped=True)]
    try:
        gf = generating_function(gs)
    except DihedralTreesError as exc:
        return [CheckResult("rational generating function", False, f"{type(exc).__name__}: {exc}")]
    out.append(CheckResult("rational generating function", True,
                           f"order {gf.order} from {gf.terms_used} terms"))
    total = gf.terms_used + extra
    out.append(CheckResult(f"F reproduces tau up to n={total}",
                           gf.series(total) == tau_terms(gs, total)))
    out.append(CheckResult("F(x) = F(1/(eta^2 x))", verify_symmetry(gf, P.eta)))
    out.append(CheckResult("denominator roots match characteristic bases",
                           denominator_roots_consistent(gf, P)))
    return out


def run_checks(gs: GenSet, n_max: int, with_genfun: bool = True) -> list[CheckResult]:
    results = polynomial_checks(gs)
    for n in range(1, n_max + 1):
        results.extend(instance_checks(gs, n))
    results.extend(asymptotic_checks(gs))
    if with_genfun:
        results.extend(genfun_checks(gs))
    return results
