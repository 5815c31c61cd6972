import math

import pytest
from hypothesis import given, settings

from dihedral_trees import associated_poly, asymptotic_ratio, mahler_quadrature, mahler_roots
from dihedral_trees.asym import find_roots

from conftest import FAMILY_B, PRISM
from test_polyalg import gensets


def test_mahler_prism_and_family_b():
    assert mahler_roots(associated_poly(PRISM)).A_roots == pytest.approx(2 + math.sqrt(3), abs=1e-12)
    assert mahler_roots(associated_poly(FAMILY_B)).A_roots == pytest.approx(
        4 * (4 + math.sqrt(15)), abs=1e-10)


def test_offset_beats_midpoint():
    P = associated_poly(PRISM)
    A = 2 + math.sqrt(3)
    off = abs(mahler_quadrature(P, 2**16) - A) / A
    mid = abs(mahler_quadrature(P, 2**16, offset=0.5) - A) / A
    assert off < 1e-9
    assert mid > 1e-5  # midpoint bias is about 2 log 2 / N


def test_ratio_converges():
    for gs in (PRISM, FAMILY_B):
        r = dict(asymptotic_ratio(gs, 40))
        assert abs(r[40] - 1) < 1e-6
    assert dict(asymptotic_ratio(PRISM, 2))[2] == pytest.approx(0.86156, abs=1e-5)


@settings(max_examples=40, deadline=None)
@given(gensets)
def test_roots_come_in_reciprocal_pairs(gs):
    P = associated_poly(gs)
    roots = find_roots(P)
    assert len(roots) == 2 * P.r
    assert sum(z == 1 for z in roots) >= 2
    for z in roots:
        assert min(abs(z * w - 1) for w in roots) < 1e-6


@settings(max_examples=40, deadline=None)
@given(gensets)
def test_quadrature_agrees_with_roots_when_connected_family(gs):
    if gs.gcd_parameters() != 1:
        return
    est = mahler_roots(associated_poly(gs))
    assert est.A_roots >= 1
    assert est.agreement < 1e-5
