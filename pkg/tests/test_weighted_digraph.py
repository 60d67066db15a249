import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import InvalidWeightError, VertexIndexError
from models.weighted_digraph import WeightedDigraph
from tests.conftest import build_random_graph


def test_add_edge_real_weight_is_symmetric():
    g = WeightedDigraph.empty(2).add_edge(0, 1, 1 + 0j)
    assert g.weight(0, 1) == 1
    assert g.weight(1, 0) == 1


def test_add_edge_complex_weight_stores_conjugate():
    g = WeightedDigraph.empty(2).add_edge(0, 1, 1j)
    assert g.weight(0, 1) == 1j
    assert g.weight(1, 0) == -1j


def test_add_edge_overwrites_both_directions():
    g = WeightedDigraph.empty(2).add_edge(0, 1, 1j).add_edge(1, 0, 2)
    assert g.weight(0, 1) == 2
    assert g.weight(1, 0) == 2


def test_add_edge_is_pure():
    g = WeightedDigraph.empty(3)
    g.add_edge(0, 1, 1)
    assert g.is_empty()


@pytest.mark.parametrize("i, j, w, error", [
    (0, 0, 1j, InvalidWeightError),
    (0, 1, 0, InvalidWeightError),
    (0, 2, 1, VertexIndexError),
    (-1, 0, 1, VertexIndexError),
])
def test_add_edge_rejects(i, j, w, error):
    with pytest.raises(error):
        WeightedDigraph.empty(2).add_edge(i, j, w)


def test_vertex_index_error_is_index_error():
    with pytest.raises(IndexError):
        WeightedDigraph.empty(2).degree(5)


def test_remove_edge_drops_both_directions():
    g = WeightedDigraph.empty(3).add_edge(0, 1, 2j).add_edge(1, 2, 1)
    g = g.remove_edge(1, 0)
    assert not g.has_edge(0, 1) and not g.has_edge(1, 0)
    assert g.has_edge(2, 1)


def test_adjacency_matrix_examples():
    g = WeightedDigraph.empty(2).add_edge(0, 1, 1j)
    np.testing.assert_array_equal(g.adjacency_matrix(), [[0, 1j], [-1j, 0]])

    np.testing.assert_array_equal(WeightedDigraph.empty(3).adjacency_matrix(), np.zeros((3, 3)))

    g = WeightedDigraph.empty(2).add_edge(0, 0, 2).add_edge(0, 1, 1)
    np.testing.assert_array_equal(g.adjacency_matrix(), [[2, 1], [1, 0]])


def test_degree_examples():
    assert WeightedDigraph.empty(2).add_edge(0, 1, 3 - 4j).degree(0) == 5
    assert WeightedDigraph.empty(2).add_edge(0, 0, -2).degree(0) == 2
    assert WeightedDigraph.empty(2).add_edge(0, 0, -2).degree(1) == 0


def test_laplacians_of_single_edge(single_edge_graph):
    np.testing.assert_array_equal(single_edge_graph.laplacian(), [[1, -1], [-1, 1]])
    np.testing.assert_array_equal(single_edge_graph.signless_laplacian(), [[1, 1], [1, 1]])


def test_positive_loop_cancels_in_laplacian():
    g = WeightedDigraph.empty(1).add_edge(0, 0, 2)
    np.testing.assert_array_equal(g.laplacian(), [[0]])
    np.testing.assert_array_equal(g.signless_laplacian(), [[4]])


def test_from_adjacency_reads_hermitian_matrix():
    a = np.array([[1.5, 2 - 1j, 0], [2 + 1j, 0, 1e-14], [0, 1e-14, -1]])
    g = WeightedDigraph.from_adjacency(a)
    assert g.weight(0, 1) == 2 - 1j
    assert g.weight(0, 0) == 1.5
    assert not g.has_edge(1, 2)
    np.testing.assert_allclose(g.adjacency_matrix(), np.where(np.abs(a) > 1e-12, a, 0))


@pytest.mark.parametrize("matrix", [
    [[0, 1], [2, 0]],
    [[1j, 0], [0, 0]],
    [[0, 1], [0, 0]],
])
def test_from_adjacency_rejects_non_hermitian(matrix):
    with pytest.raises(InvalidWeightError):
        WeightedDigraph.from_adjacency(np.array(matrix, dtype=complex))


def test_is_simple():
    assert WeightedDigraph.empty(3).add_edge(0, 1, 1).add_edge(1, 2, 1).is_simple()
    assert not WeightedDigraph.empty(3).add_edge(0, 1, 2).is_simple()
    assert not WeightedDigraph.empty(3).add_edge(0, 0, 1).is_simple()


def test_equals_is_labeled_with_tolerance():
    g = WeightedDigraph.empty(3).add_edge(0, 1, 1j)
    assert g.equals(WeightedDigraph.empty(3).add_edge(0, 1, 1j + 1e-13))
    assert not g.equals(WeightedDigraph.empty(3).add_edge(0, 1, 1j + 1e-9))
    assert not g.equals(WeightedDigraph.empty(3).add_edge(1, 2, 1j))
    assert not g.equals(WeightedDigraph.empty(4).add_edge(0, 1, 1j))


def test_edge_list_lists_each_pair_once():
    g = WeightedDigraph.empty(3).add_edge(2, 0, 1j).add_edge(1, 1, 3)
    assert g.edge_list() == [(0, 2, -1j), (1, 1, 3)]


@settings(max_examples=200, deadline=None, derandomize=True)
@given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1), vertices=st.integers(min_value=2, max_value=8))
def test_random_graph_invariants(seed, vertices):
    g = build_random_graph(np.random.default_rng(seed), vertices, density=0.5)
    a = g.adjacency_matrix()

    # Hermítica exacta: las dos direcciones se guardan, no se recalculan
    np.testing.assert_array_equal(a, a.conj().T)
    np.testing.assert_array_equal(g.degrees(), np.abs(a).sum(axis=1))
    assert np.linalg.eigvalsh(g.signless_laplacian()).min() >= -1e-10
    np.testing.assert_array_equal(g.degree_matrix() + a, g.signless_laplacian())


@settings(max_examples=50, deadline=None, derandomize=True)
@given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_overwrite_with_same_weight_is_idempotent(seed):
    g = build_random_graph(np.random.default_rng(seed), 5, density=0.6)
    i, j, w = g.edge_list()[0]
    np.testing.assert_array_equal(g.add_edge(i, j, w).adjacency_matrix(), g.adjacency_matrix())


# ===== Constructor y networkx =====

@pytest.mark.parametrize("edges", [
    [(0, 1, 1j), (1, 0, 1j)],
    [(0, 0, 1j)],
    [(0, 1, 0)],
    [(0, 1, 1), (0, 1, 2)],
])
def test_constructor_checks_every_edge(edges):
    with pytest.raises(InvalidWeightError):
        WeightedDigraph(2, edges)


def test_constructor_accepts_consistent_reverse_edge():
    g = WeightedDigraph(2, [(0, 1, 1 + 2j), (1, 0, 1 - 2j), (1, 1, 3)])
    assert g == WeightedDigraph.empty(2).add_edge(0, 1, 1 + 2j).add_edge(1, 1, 3)


def test_constructor_rejects_bad_vertex_count():
    with pytest.raises(VertexIndexError):
        WeightedDigraph(0)
    with pytest.raises(VertexIndexError):
        WeightedDigraph(2, [(0, 2, 1)])


def test_graph_is_unhashable():
    with pytest.raises(TypeError):
        hash(WeightedDigraph.empty(2))


def test_backing_digraph_is_frozen():
    g = WeightedDigraph.empty(2).add_edge(0, 1, 1j)
    assert nx.is_frozen(g.nx_graph)
    with pytest.raises(nx.NetworkXError):
        g.nx_graph.add_edge(0, 0, weight=1.0)
    assert g.nx_graph[1][0]["weight"] == -1j


def test_from_networkx_reads_weights():
    g = WeightedDigraph.from_networkx(nx.path_graph(3))
    assert g.is_simple()
    np.testing.assert_array_equal(g.adjacency_matrix(), [[0, 1, 0], [1, 0, 1], [0, 1, 0]])

    h = nx.Graph()
    h.add_nodes_from(range(3))
    h.add_edge(0, 2, weight=2 - 1j)
    g = WeightedDigraph.from_networkx(h)
    assert g.weight(2, 0) == 2 + 1j
    assert g.vertex_count == 3
