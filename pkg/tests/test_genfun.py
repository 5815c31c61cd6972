from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dihedral_trees import fit_recurrence, generating_function, rational_gf, verify_symmetry
from dihedral_trees.errors import InsufficientTerms, NoRecurrenceFound
from dihedral_trees.genfun import _lfsr_length_mod_p, denominator_roots_consistent, order_bound, tau_terms
from dihedral_trees import associated_poly

from conftest import FAMILY_B, PRISM

x = sympy.symbols("x")


def series_of(expr, count):
    s = sympy.series(expr, x, 0, count + 1).removeO()
    return [int(s.coeff(x, k)) for k in range(1, count + 1)]


def test_prism_closed_form_matches_u_form():
    u = (x + 1 / x) / 2
    u_form = (-3 + u + u**2) / (2 * (u - 2) ** 2 * (u - 1))
    assert series_of(sympy.cancel(u_form), 20) == tau_terms(PRISM, 20)


def test_family_b_printed_u_form_is_not_the_series():
    # The u-form quoted for this family expands to 6, 240, 52560, ...
    # rather than its own series 3, 60, 6561, ...; see the decisions ledger.
    u = x + 1 / (4 * x)
    num = 6 * (-1745300 + 4540750 * u - 3003815 * u**2 + 346990 * u**3 + 171265 * u**4
               - 47660 * u**5 + 4840 * u**6 - 272 * u**7 + 16 * u**8)
    den = (2 + u) * (8 + u) ** 2 * (-5 + 2 * u) ** 2 * (265 - 80 * u + 4 * u**2) ** 2
    printed = series_of(sympy.cancel(num / den), 4)
    assert printed == [6, 240, 52560, 3077760]
    assert printed != tau_terms(FAMILY_B, 4)


def test_family_b_chebyshev_closed_form():
    # tau(n) = n 2^n / 18 |2T(n, -5/4) - 2| |2T(n, 4) - 2|
    from dihedral_trees import cheb_T
    for n in range(1, 25):
        v = Fraction(n * 2**n, 18) * abs(2 * cheb_T(n, Fraction(-5, 4)) - 2) * abs(2 * cheb_T(n, 4) - 2)
        assert v == tau_terms(FAMILY_B, n)[-1]


def test_family_b_denominator_factorization():
    # reciprocals of the bases {-2, 4, 1} x {4 +- sqrt15, 1} minus the trivial one, each doubled
    gf = generating_function(FAMILY_B)
    D = sympy.Poly(list(reversed(gf.denominator.coeffs)), x)
    want = sympy.Poly(((x - 1) * (2*x + 1) * (4*x - 1) * (x**2 - 8*x + 1)
                       * (4*x**2 + 16*x + 1) * (16*x**2 - 32*x + 1)) ** 2, x)
    assert D == want


def test_family_b_u_form():
    # F depends on x only through u = x + 1/(4x)
    u = sympy.symbols("u")
    gf = generating_function(FAMILY_B)
    N = sum(c * x**k for k, c in enumerate(gf.numerator.coeffs))
    D = sum(c * x**k for k, c in enumerate(gf.denominator.coeffs))
    F = sympy.cancel(N / D)
    swapped = sympy.cancel(F.subs(x, 1 / (4 * x)))
    assert sympy.cancel(F - swapped) == 0


def test_prism_recurrence():
    L, c = fit_recurrence(tau_terms(PRISM, 30))
    assert L == 6 and list(c) == [10, -35, 52, -35, 10, -1]


def test_held_out_terms_both_families():
    for gs in (PRISM, FAMILY_B):
        gf = generating_function(gs)
        total = gf.terms_used + 40
        assert gf.series(total) == tau_terms(gs, total)
        assert denominator_roots_consistent(gf, associated_poly(gs))


def test_symmetry_needs_eta():
    gf = generating_function(FAMILY_B)
    assert verify_symmetry(gf, 2)
    assert not verify_symmetry(gf, 1)


def test_order_bound():
    assert [order_bound(r) for r in (1, 2, 3, 4)] == [2, 6, 18, 54]


def test_too_few_terms():
    with pytest.raises(InsufficientTerms):
        fit_recurrence([1, 2, 3])
    with pytest.raises(NoRecurrenceFound):
        fit_recurrence(tau_terms(FAMILY_B, 60), max_order=5)


def test_generating_function_beyond_practical_cap():
    from dihedral_trees import GenSet
    with pytest.raises(InsufficientTerms):
        generating_function(GenSet((2, 3), (0, 4)), max_order=20)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4).filter(lambda c: c[-1] != 0),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_recovers_random_recurrences(coeffs, init):
    L = len(coeffs)
    seq = list(init[:L])
    while len(seq) < 40:
        seq.append(sum(coeffs[i] * seq[-1 - i] for i in range(L)))
    order, found = fit_recurrence(seq)
    assert order <= L
    assert order >= _lfsr_length_mod_p(seq)
    for n in range(order, 40):
        assert sum(found[i] * seq[n - 1 - i] for i in range(order)) == seq[n]


def test_rational_gf_geometric():
    # tau(n) = 2^n -> F = 2x / (1 - 2x)
    seq = [2**n for n in range(1, 20)]
    gf = rational_gf(seq, fit_recurrence(seq))
    assert gf.numerator.coeffs == (0, 2) and gf.denominator.coeffs == (1, -2)
