import numpy as np
import pytest

from models.density_matrix import DensityMatrix
from models.enums import LaplacianKind
from models.errors import DensityMatrixError, NotGraphicalError, ZeroTraceError
from models.state_params import WernerParams
from models.weighted_digraph import WeightedDigraph
from services.density_service import DensityService
from services.state_generator import StateGenerator
from tests.conftest import build_random_graph

KINDS = [LaplacianKind.SIGNLESS, LaplacianKind.COMBINATORIAL]

NOT_GRAPHICAL = np.array([[1, 2], [2, 4]]) / 5


# ===== DensityMatrix =====

@pytest.mark.parametrize("array, field", [
    (np.array([[0.5, 1j], [0, 0.5]]), "max_defect"),
    (np.eye(2) / 3, "trace"),
    (np.diag([1.5, -0.5]), "eigenvalue"),
    (np.ones((2, 3)) / 2, "shape"),
])
def test_density_matrix_rejects(array, field):
    with pytest.raises(DensityMatrixError) as info:
        DensityMatrix.from_array(array)
    assert field in info.value.details


def test_maximally_mixed():
    rho = DensityMatrix.maximally_mixed(4)
    assert rho.order == 4
    np.testing.assert_allclose(rho.eigenvalues(), np.full(4, 0.25))


def test_density_matrix_entries_are_read_only():
    rho = DensityMatrix.maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.entries[0, 0] = 1


# ===== from_graph =====

def test_from_graph_single_edge(single_edge_graph):
    rho_q = DensityService.from_graph(single_edge_graph, LaplacianKind.SIGNLESS)
    rho_l = DensityService.from_graph(single_edge_graph, LaplacianKind.COMBINATORIAL)
    np.testing.assert_allclose(rho_q.entries, np.array([[1, 1], [1, 1]]) / 2)
    np.testing.assert_allclose(rho_l.entries, np.array([[1, -1], [-1, 1]]) / 2)


def test_from_graph_matches_werner_density():
    p = WernerParams(d=3, x=0.5)
    graph = StateGenerator.werner_graph(p).graph
    rho = DensityService.from_graph(graph, LaplacianKind.SIGNLESS)
    np.testing.assert_allclose(rho.entries, StateGenerator.werner_density(p).entries, atol=1e-12)


@pytest.mark.parametrize("kind", KINDS)
def test_from_graph_empty_graph_has_zero_trace(kind):
    with pytest.raises(ZeroTraceError) as info:
        DensityService.from_graph(WeightedDigraph.empty(3), kind)
    assert info.value.code == "zero_trace"


def test_positive_loops_only_cancel_combinatorial_trace():
    g = WeightedDigraph.empty(2).add_edge(0, 0, 1.0).add_edge(1, 1, 3.0)
    with pytest.raises(ZeroTraceError):
        DensityService.from_graph(g, LaplacianKind.COMBINATORIAL)
    rho = DensityService.from_graph(g, LaplacianKind.SIGNLESS)
    np.testing.assert_allclose(rho.entries, np.diag([0.25, 0.75]))


def test_zero_trace_error_is_density_matrix_error():
    assert issubclass(ZeroTraceError, DensityMatrixError)


# ===== is_graphical =====

def test_is_graphical_examples():
    assert not DensityService.is_graphical(NOT_GRAPHICAL)
    assert DensityService.is_graphical(DensityMatrix.maximally_mixed(5))
    assert DensityService.is_graphical(np.array([[1, 1], [1, 1]]) / 2)


def test_graphical_margins():
    margins = DensityService.graphical_margins(NOT_GRAPHICAL)
    np.testing.assert_allclose(margins, [-0.2, 0.4])


# ===== extract_graph =====

def test_extract_graph_maximally_mixed_gives_loops():
    g = DensityService.extract_graph(DensityMatrix.maximally_mixed(2), LaplacianKind.SIGNLESS)
    assert g.edge_list() == [(0, 0, 0.25), (1, 1, 0.25)]


def test_extract_graph_equality_case_has_no_loops():
    g = DensityService.extract_graph(np.array([[1, 1], [1, 1]]) / 2, LaplacianKind.SIGNLESS)
    assert g.edge_list() == [(0, 1, 0.5)]


def test_extract_graph_combinatorial_negates_weights():
    rho = np.array([[0.5, 0.1j], [-0.1j, 0.5]])
    g = DensityService.extract_graph(rho, LaplacianKind.COMBINATORIAL)
    assert g.weight(0, 1) == pytest.approx(-0.1j)
    assert g.weight(0, 0) == pytest.approx(-0.2)


def test_extract_graph_rejects_non_graphical():
    with pytest.raises(NotGraphicalError) as info:
        DensityService.extract_graph(NOT_GRAPHICAL)
    assert info.value.details["row"] == 0
    assert info.value.details["margin"] == pytest.approx(-0.2)


@pytest.mark.parametrize("kind", KINDS)
def test_extracted_graph_has_unit_laplacian_trace(kind):
    rho = StateGenerator.werner_density(WernerParams(d=2, x=0.2))
    g = DensityService.extract_graph(rho, kind)
    assert DensityService.laplacian_trace(g, kind) == pytest.approx(1.0, abs=1e-12)


# ===== Propiedades con grafos aleatorios =====

@pytest.mark.parametrize("kind", KINDS)
def test_roundtrip_random_graphical_states(rng, kind):
    for _ in range(1000):
        source = build_random_graph(rng, int(rng.integers(4, 10)), density=0.4, loop_density=0.4)
        rho = DensityService.from_graph(source, LaplacianKind.SIGNLESS)
        graph = DensityService.extract_graph(rho, kind)
        back = DensityService.from_graph(graph, kind)
        np.testing.assert_allclose(back.entries, rho.entries, rtol=0, atol=1e-12)


@pytest.mark.parametrize("kind", KINDS)
def test_graph_states_are_graphical(rng, kind):
    for _ in range(200):
        g = build_random_graph(rng, int(rng.integers(2, 8)), density=0.5)
        rho = DensityService.from_graph(g, kind)
        assert DensityService.is_graphical(rho)
        assert rho.min_eigenvalue() >= -1e-10
        assert np.trace(rho.entries).real == pytest.approx(1.0, abs=1e-10)
