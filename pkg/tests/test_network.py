import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spinpst import (
    DisconnectedGraph,
    InvalidEdge,
    build_binary_tree_modulated,
    build_binary_tree_unweighted,
    build_circulant6,
    build_demo,
    build_engineered_chain,
    build_hypercube_column,
    build_star_extended,
    build_w_network,
    from_edge_list,
    hamiltonian,
)
from spinpst.network import all_demo_networks


def test_two_vertex_network():
    net = from_edge_list(2, [(1, 2, 1.0)], reference=1)
    assert net.vertex_count == 2
    assert net.edges == ((1, 2, 1.0),)


def test_single_vertex_network():
    net = from_edge_list(1, [], reference=1)
    assert net.vertex_count == 1
    assert hamiltonian(net).shape == (1, 1)


def test_isolated_vertex_is_rejected():
    with pytest.raises(DisconnectedGraph):
        from_edge_list(3, [(1, 2, 1.0)], reference=1)


@pytest.mark.parametrize(
    "edges",
    [
        [(1, 3, 1.0)],  # out of range
        [(0, 1, 1.0)],
        [(1, 1, 1.0)],  # self-loop
        [(1, 2, 1.0), (2, 1, 2.0)],  # duplicate
        [(1, 2, 0.0)],
        [(1, 2, -1.0)],
        [(1, 2, float("nan"))],
    ],
)
def test_invalid_edges(edges):
    with pytest.raises(InvalidEdge):
        from_edge_list(2, edges)


def test_bad_scale_and_reference():
    with pytest.raises(InvalidEdge):
        from_edge_list(2, [(1, 2, 1.0)], scale=0.0)
    with pytest.raises(InvalidEdge):
        from_edge_list(2, [(1, 2, 1.0)], reference=3)


def test_edges_are_normalised():
    net = from_edge_list(3, [(3, 2, 1.0), (2, 1, 0.5)])
    assert net.edges == ((1, 2, 0.5), (2, 3, 1.0))
    assert net == from_edge_list(3, [(1, 2, 0.5), (2, 3, 1.0)])
    assert hash(net) == hash(from_edge_list(3, [(1, 2, 0.5), (2, 3, 1.0)]))


def test_hypercube_d2_layout():
    net = build_hypercube_column(2)
    assert net.vertex_count == 4
    assert set(net.neighbors(1)) == {2, 3}
    assert set(net.neighbors(4)) == {2, 3}


def test_hypercube_d1_is_two_vertex_network():
    assert build_hypercube_column(1) == from_edge_list(2, [(1, 2, 1.0)])


def test_hypercube_d3_is_cubic():
    net = build_hypercube_column(3)
    assert net.vertex_count == 8
    assert all(net.degree(v) == 3 for v in range(1, 9))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_hypercube_column_conditions(d):
    net = build_hypercube_column(d)
    sizes = [math.comb(d, k) for k in range(d + 1)]
    starts = np.cumsum([0] + sizes)
    column = {v: k for k in range(d + 1) for v in range(starts[k] + 1, starts[k + 1] + 1)}
    for v in range(1, net.vertex_count + 1):
        k = column[v]
        up = sum(column[w] == k + 1 for w in net.neighbors(v))
        down = sum(column[w] == k - 1 for w in net.neighbors(v))
        assert up == d - k
        assert down == k


def test_w_network():
    net = build_w_network()
    assert net.degree(1) == 6 and net.degree(8) == 6
    assert all(net.degree(v) == 2 for v in range(2, 8))
    assert net.edge_count == 12
    assert net.coupling(1, 2) and net.coupling(2, 8)


def test_binary_tree_unweighted():
    net = build_binary_tree_unweighted()
    assert net.degree(1) == 2
    assert all(net.degree(v) == 1 for v in range(4, 8))
    assert net.edge_count == 6


@pytest.mark.parametrize(
    "n, couplings",
    [
        (2, [1.0]),
        (4, [math.sqrt(3), 2.0, math.sqrt(3)]),
        (5, [2.0, math.sqrt(6), math.sqrt(6), 2.0]),
    ],
)
def test_engineered_chain_couplings(n, couplings):
    net = build_engineered_chain(n)
    np.testing.assert_allclose([c for _, _, c in net.edges], couplings, rtol=1e-15)


@pytest.mark.parametrize("n", range(2, 12))
def test_engineered_chain_mirror_symmetry(n):
    net = build_engineered_chain(n)
    for k in range(1, n):
        assert net.coupling(k, k + 1) == net.coupling(n - k, n - k + 1)


def test_star_extended():
    net = build_star_extended()
    assert net.coupling(1, 2) == math.sqrt(3)
    assert net.degree(2) == 4


def test_circulant6_is_a_two_regular_cycle():
    net = build_circulant6()
    assert all(net.degree(v) == 2 for v in range(1, 7))
    assert net.coupling(1, 2) == net.coupling(1, 3) == math.sqrt(1.5)
    assert net.coupling(2, 4) == net.coupling(3, 5) == 2.0


def test_binary_tree_modulated():
    net = build_binary_tree_modulated()
    assert net.vertex_count == 16 and net.edge_count == 15
    assert net.coupling(1, 2) == 2.0
    leaves = [v for v in range(1, 17) if net.degree(v) == 1]
    assert leaves == [1] + list(range(9, 17))
    assert all(net.coupling(u, v) == math.sqrt(2) for u, v, _ in net.edges if v >= 9)


def test_hamiltonian_half_coupling_convention():
    h = hamiltonian(from_edge_list(2, [(1, 2, 1.0)]))
    np.testing.assert_array_equal(h, [[0, 0.5], [0.5, 0]])
    assert hamiltonian(build_star_extended())[0, 1] == math.sqrt(3) / 2


def test_hamiltonian_scale_folds_in():
    net = build_w_network().with_scale(3.0)
    assert hamiltonian(net)[0, 1] == 1.5


def test_adjacency_mode_gives_adjacency_matrix():
    net = build_hypercube_column(3).as_adjacency()
    h = hamiltonian(net)
    expected = np.zeros((8, 8))
    for i, j, _ in net.edges:
        expected[i - 1, j - 1] = expected[j - 1, i - 1] = 1
    np.testing.assert_array_equal(h, expected)


def test_hamiltonian_is_read_only():
    h = hamiltonian(build_w_network())
    with pytest.raises(ValueError):
        h[0, 0] = 1.0


@pytest.mark.parametrize("name, net", all_demo_networks().items())
def test_builders_revalidate(name, net):
    again = from_edge_list(net.vertex_count, net.edges, net.reference, net.scale)
    assert again == net
    h = hamiltonian(net)
    assert np.array_equal(h, h.T)
    assert not np.any(np.diag(h))


def test_build_demo_names():
    assert build_demo("chain:5") == build_engineered_chain(5)
    assert build_demo("hypercube:3") == build_hypercube_column(3)
    for bad in ["chain", "chain:x", "nope", "w-network:2"]:
        with pytest.raises(ValueError):
            build_demo(bad)


@st.composite
def connected_networks(draw):
    n = draw(st.integers(1, 9))
    # random spanning tree plus extra edges
    edges = {}
    for v in range(2, n + 1):
        parent = draw(st.integers(1, v - 1))
        edges[(parent, v)] = draw(st.floats(0.1, 5.0))
    extra = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=10))
    for i, j in extra:
        if i != j:
            edges.setdefault((min(i, j), max(i, j)), draw(st.floats(0.1, 5.0)))
    ref = draw(st.integers(1, n))
    scale = draw(st.floats(0.1, 10.0))
    return from_edge_list(n, [(i, j, c) for (i, j), c in edges.items()], ref, scale)


@settings(max_examples=60, deadline=None)
@given(connected_networks())
def test_hamiltonian_structure(net):
    h = hamiltonian(net)
    assert np.array_equal(h, h.T)
    assert not np.any(np.diag(h))
    pattern = {(i, j) for i, j in zip(*np.nonzero(np.triu(h)))}
    assert pattern == {(i - 1, j - 1) for i, j, _ in net.edges}
