import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dihedral_trees import GenSet, build_graph, is_connected, laplacian, validate
from dihedral_trees.errors import InvalidParameters


def to_nx(g):
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.num_vertices))
    for u, v, m in g.edges:
        for _ in range(m):
            G.add_edge(u, v)
    return G


@st.composite
def instances(draw, n_max=14):
    n = draw(st.integers(3, n_max))
    betas = draw(st.lists(st.integers(1, (n - 1) // 2), max_size=3, unique=True)) if n > 2 else []
    gammas = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True))
    return GenSet(sorted(betas), sorted(gammas)), n


def test_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        GenSet((1,), ())
    with pytest.raises(InvalidParameters):
        GenSet((2, 1), (0,))
    with pytest.raises(InvalidParameters):
        GenSet((0,), (0,))
    with pytest.raises(InvalidParameters):
        GenSet((), (-1,))


def test_validation_messages():
    rep = validate(GenSet((1,), (0, 5)), 2)
    assert not rep.graph_valid
    assert any("β₁ < n/2" in v for v in rep.violations)
    assert any("γ₂ ≤ n−1" in v for v in rep.violations)
    assert rep.formula_valid


def test_degenerate_single_gamma_is_not_formula_valid():
    assert not validate(GenSet((), (0,)), 5).formula_valid


def test_prism_is_the_cube_for_n4():
    g = build_graph(GenSet((1,), (0,)), 4)
    assert nx.is_isomorphic(to_nx(g), nx.hypercube_graph(3))


def test_build_graph_refuses_invalid():
    with pytest.raises(InvalidParameters):
        build_graph(GenSet((1,), (0,)), 2)


@settings(max_examples=80, deadline=None)
@given(instances())
def test_graph_is_regular_with_degree_2s_plus_t(inst):
    gs, n = inst
    g = build_graph(gs, n)
    assert g.num_vertices == 2 * n
    assert all(g.degree(v) == gs.degree for v in range(2 * n))


@settings(max_examples=80, deadline=None)
@given(instances())
def test_gcd_criterion_matches_bfs_and_networkx(inst):
    gs, n = inst
    g = build_graph(gs, n)
    assert is_connected(gs, n) == g.is_connected() == nx.is_connected(to_nx(g))


@settings(max_examples=60, deadline=None)
@given(instances())
def test_laplacian_rows_sum_to_zero(inst):
    gs, n = inst
    L = laplacian(build_graph(gs, n))
    assert all(sum(row) == 0 for row in L)
    assert all(L[i][j] == L[j][i] for i in range(2 * n) for j in range(2 * n))


def test_exports():
    g = build_graph(GenSet((1,), (0,)), 3)
    assert g.to_dot().startswith("graph D {")
    lines = g.to_edgelist().strip().splitlines()
    assert len(lines) == 9
