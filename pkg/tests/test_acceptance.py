"""One test per acceptance criterion; each records a PASS/FAIL line."""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from dihedral_trees import (
    GenSet,
    associated_poly,
    asymptotic_ratio,
    build_graph,
    chebyshev_transform,
    decompose,
    fit_recurrence,
    generating_function,
    is_connected,
    laplacian,
    mahler_roots,
    q_constant,
    spectrum_values,
    tau_chebyshev,
    tau_exact,
    tau_oracle,
    tau_spectral,
    validate,
    verify_symmetry,
    xi_delta,
)
from dihedral_trees.genfun import tau_terms
from dihedral_trees.genset import all_gensets

from conftest import ACCEPTANCE_LINES, FAMILY_B, PRISM, random_instances

PRISM_TAUS = [1, 12, 75, 384, 1805, 8100, 35287, 150528]
FAMILY_B_TAUS = [3, 60, 6561, 192000, 9149415, 315059220]
RANDOM = random_instances(60, seed=7)


@contextmanager
def criterion(k, title, limit=None):
    """Record PASS/FAIL for criterion k, failing too if it overruns ``limit`` seconds."""
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    except BaseException as exc:
        ACCEPTANCE_LINES[k] = f"FAIL criterion {k}: {title} ({exc})"
        print(ACCEPTANCE_LINES[k])
        raise
    ACCEPTANCE_LINES[k] = f"PASS criterion {k}: {title} ({time.perf_counter() - start:.2f} s)"
    print(ACCEPTANCE_LINES[k])


def rel(x, ref):
    return abs(x - ref) / abs(ref)


def test_criterion_1_prism_series():
    with criterion(1, "prism series n=1..8", limit=1.0):
        assert [tau_exact(PRISM, n) for n in range(1, 9)] == PRISM_TAUS


def test_criterion_2_second_series():
    with criterion(2, "betas {1,2}, gammas {1,3,5} series n=1..6", limit=1.0):
        assert [tau_exact(FAMILY_B, n) for n in range(1, 7)] == FAMILY_B_TAUS


def test_criterion_3_closed_form_parameters():
    with criterion(3, "eta, q, Q, r for both families"):
        P = associated_poly(PRISM)
        assert P.eta == 1 and q_constant(PRISM) == 2
        # 4(w-1)(w-2) = 8 - 12w + 4w^2
        assert chebyshev_transform(P).coeffs == (8, -12, 4)
        P = associated_poly(FAMILY_B)
        assert (P.eta, q_constant(FAMILY_B), P.r) == (2, 54, 3)


def test_criterion_4_engine_equivalence():
    assert len(RANDOM) >= 50
    with criterion(4, f"engines agree on {len(RANDOM)} random instances", limit=60.0):
        for gs, n in RANDOM:
            exact = tau_exact(gs, n)
            assert tau_oracle(gs, n) == exact, (gs, n)
            assert rel(tau_spectral(gs, n), exact) <= 1e-9, (gs, n)
            assert rel(tau_chebyshev(gs, n), exact) <= 1e-6, (gs, n)


def test_criterion_5_arithmetic_structure():
    with criterion(5, "square decomposition, xi/delta, P(-1) = 4 xi"):
        assert xi_delta(PRISM) == (6, 6)
        assert xi_delta(FAMILY_B) == (10, 10)
        for gs, n in RANDOM:
            P = associated_poly(gs)
            xi, _ = xi_delta(gs)
            assert P(-1) == 4 * xi
            d = decompose(gs, n, tau_exact(gs, n))
            assert d.parity_case == ("odd" if n % 2 else "even")
            assert isinstance(d.a, int) and d.a >= 1


def test_criterion_6_asymptotics():
    targets = [(PRISM, 2 + math.sqrt(3)), (FAMILY_B, 4 * (4 + math.sqrt(15)))]
    with criterion(6, "Mahler measure, quadrature, ratio -> 1", limit=10.0):
        for gs, A in targets:
            est = mahler_roots(associated_poly(gs), grid=2**16)
            assert abs(est.A_roots - A) <= 1e-9
            assert abs(est.A_quadrature - est.A_roots) <= 1e-5
            ratios = dict(asymptotic_ratio(gs, 40, n_min=40))
            assert abs(ratios[40] - 1) <= 1e-6


def test_criterion_7_generating_function():
    with criterion(7, "recurrence, held-out terms, integrality, symmetry", limit=30.0):
        order, coeffs = fit_recurrence(tau_terms(PRISM, 32))
        assert order == 6 and list(coeffs) == [10, -35, 52, -35, 10, -1]
        for gs, eta in ((PRISM, 1), (FAMILY_B, 2)):
            gf = generating_function(gs)
            total = gf.terms_used + 40
            assert gf.series(total)[gf.terms_used:] == tau_terms(gs, total)[gf.terms_used:]
            assert all(isinstance(c, int) for c in gf.numerator.coeffs + gf.denominator.coeffs)
            assert associated_poly(gs).eta == eta
            assert verify_symmetry(gf, eta)


def test_criterion_8_connectivity_equivalence():
    with criterion(8, "gcd criterion = BFS, exhaustive n<=12, params<=6", limit=30.0):
        checked = 0
        for gs in all_gensets(6):
            for n in range(1, 13):
                if not validate(gs, n).graph_valid:
                    continue
                assert is_connected(gs, n) == build_graph(gs, n).is_connected(), (gs, n)
                checked += 1
        assert checked > 1000


def test_criterion_9_spectrum():
    with criterion(9, "prism n=3 spectrum and dense eigensolve on 20 instances"):
        vals = spectrum_values(PRISM, 3)
        assert np.allclose(sorted(vals), [0, 2, 3, 3, 5, 5], atol=1e-8)
        small = random_instances(20, seed=11, n_max=12)
        for gs, n in small:
            dense = np.linalg.eigvalsh(np.array(laplacian(build_graph(gs, n)), dtype=float))
            assert np.allclose(np.sort(dense), sorted(spectrum_values(gs, n)), atol=1e-8), (gs, n)
