import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.sparse.csgraph import shortest_path

from spinpst import (
    JacobiSequences,
    QuotientClosureViolation,
    build_binary_tree_unweighted,
    build_engineered_chain,
    build_hypercube_column,
    build_star_extended,
    build_w_network,
    from_edge_list,
    hamiltonian,
    layer_vectors,
    quotient_matrix,
    reduce,
    stratify,
)
from spinpst.network import all_demo_networks

from test_network import connected_networks


def bfs_distance_oracle(net):
    """Hop distances from the reference via scipy's all-pairs shortest path."""
    adj = (hamiltonian(net) != 0).astype(float)
    dist = shortest_path(adj, unweighted=True, directed=False)
    return dist[net.reference - 1]


@pytest.mark.parametrize(
    "net, sizes",
    [
        (build_w_network(), (1, 6, 1)),
        (build_engineered_chain(4), (1, 1, 1, 1)),
        (build_binary_tree_unweighted(), (1, 2, 4)),
        (build_star_extended(), (1, 1, 3)),
    ],
)
def test_layer_sizes(net, sizes):
    assert stratify(net).sizes == sizes


@settings(max_examples=60, deadline=None)
@given(connected_networks())
def test_layers_match_distance_oracle(net):
    strat = stratify(net)
    dist = bfs_distance_oracle(net)
    for k, layer in enumerate(strat.layers):
        assert all(dist[v - 1] == k for v in layer)
    assert strat.vertex_count == net.vertex_count
    assert strat.depth == int(dist.max())
    layer_of = strat.layer_of()
    for i, j, _ in net.edges:
        assert abs(layer_of[i] - layer_of[j]) <= 1


def test_layer_vectors_hypercube():
    phi = layer_vectors(stratify(build_hypercube_column(2)), 4)
    np.testing.assert_allclose(phi[1], [0, 1 / math.sqrt(2), 1 / math.sqrt(2), 0], rtol=0, atol=1e-16)


def test_layer_vectors_chain_are_site_vectors():
    phi = layer_vectors(stratify(build_engineered_chain(5)), 5)
    np.testing.assert_array_equal(phi, np.eye(5))


@pytest.mark.parametrize("name, net", all_demo_networks().items())
def test_layer_vectors_orthonormal(name, net):
    phi = layer_vectors(stratify(net), net.vertex_count)
    np.testing.assert_allclose(phi @ phi.T, np.eye(phi.shape[0]), atol=1e-15)


def test_reduce_two_vertex():
    j = reduce(from_edge_list(2, [(1, 2, 1.0)]))
    assert j.omega == pytest.approx((0.25,), abs=1e-15)
    assert j.alpha == (0.0, 0.0)


def test_reduce_hypercube_d3():
    j = reduce(build_hypercube_column(3))
    np.testing.assert_allclose(j.omega, [0.75, 1.0, 0.75], atol=1e-12)
    assert not any(j.alpha)


def test_reduce_star_uses_hamiltonian_values():
    # omega_k = (phi_k . H phi_{k-1})^2 = (sqrt(3)/2)^2 on both links
    j = reduce(build_star_extended())
    np.testing.assert_allclose(j.omega, [0.75, 0.75], atol=1e-12)
    assert j.layer_sizes == (1, 1, 3)


def test_reduce_single_vertex():
    j = reduce(from_edge_list(1, []))
    assert j.omega == () and j.alpha == (0.0,)


def test_closure_violation_from_star_leaf():
    net = build_star_extended().with_reference(3)
    with pytest.raises(QuotientClosureViolation) as info:
        reduce(net)
    assert info.value.k == 1
    assert info.value.residual > 1e-3


def test_closure_violation_on_irregular_graph():
    # path 1-2-3 plus pendant 4 on 2 and 5 on 4: layer 2 = {3, 4} with unequal down-edges upward
    net = from_edge_list(5, [(1, 2, 1.0), (2, 3, 1.0), (2, 4, 1.0), (4, 5, 1.0)])
    with pytest.raises(QuotientClosureViolation):
        reduce(net)


@pytest.mark.parametrize("name, net", all_demo_networks().items())
def test_builders_reduce_with_zero_alpha(name, net):
    j = reduce(net)
    assert all(w > 0 for w in j.omega)
    assert all(a == 0.0 for a in j.alpha)


@pytest.mark.parametrize("name, net", all_demo_networks().items())
def test_quotient_matrix_is_projected_hamiltonian(name, net):
    phi = layer_vectors(stratify(net), net.vertex_count)
    projected = phi @ hamiltonian(net) @ phi.T
    np.testing.assert_allclose(quotient_matrix(reduce(net)), projected, atol=1e-14)


@pytest.mark.parametrize(
    "net",
    [build_w_network(), build_hypercube_column(2), build_hypercube_column(3),
     build_hypercube_column(4), build_binary_tree_unweighted()],
)
def test_adjacency_mode_omega_formula(net):
    net = net.as_adjacency()
    strat = stratify(net)
    layer_of = strat.layer_of()
    j = reduce(net)
    for k in range(strat.depth):
        down = {sum(layer_of[w] == k for w in net.neighbors(v)) for v in strat.layers[k + 1]}
        assert len(down) == 1
        kappa = down.pop()
        expected = len(strat.layers[k + 1]) / len(strat.layers[k]) * kappa**2
        assert j.omega[k] == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "omega, off",
    [
        ((0.5, 0.5), [1 / math.sqrt(2)] * 2),
        ((1, 1.5, 1.5, 1), [1, math.sqrt(1.5), math.sqrt(1.5), 1]),
    ],
)
def test_quotient_matrix_off_diagonals(omega, off):
    q = quotient_matrix(JacobiSequences.symmetric(omega))
    np.testing.assert_allclose(np.diag(q, 1), off, rtol=1e-15)
    np.testing.assert_array_equal(q, q.T)
    assert not np.any(np.diag(q))


def test_quotient_matrix_single_layer():
    np.testing.assert_array_equal(quotient_matrix(JacobiSequences((), (0.0,))), [[0.0]])


def test_jacobi_length_mismatch():
    with pytest.raises(ValueError):
        JacobiSequences((1.0,), (0.0,))
