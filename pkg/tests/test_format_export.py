import json

import numpy as np
import pytest

from models.clustered_graph import ClusteredGraph
from models.criterion_report import CriterionReport
from models.errors import DensityMatrixError, FormatError, InvalidWeightError, VertexIndexError
from models.state_params import WernerParams
from models.weighted_digraph import WeightedDigraph
from managers.export_manager import ExportManager
from managers.format_manager import FormatManager
from services.state_generator import StateGenerator


# ===== Lectura de grafos =====

def test_parse_graph_reads_edges_and_shape():
    data = {
        "vertices": 4,
        "edges": [{"from": 0, "to": 2, "re": 1.0, "im": -0.5}, {"from": 1, "to": 1, "re": 2}],
        "shape": [2, 2],
    }
    graph, shape = FormatManager.parse_graph(data)
    assert shape == (2, 2)
    assert graph.weight(0, 2) == 1 - 0.5j
    assert graph.weight(2, 0) == 1 + 0.5j
    assert graph.weight(1, 1) == 2


def test_parse_graph_accepts_consistent_reverse_edge():
    data = {"vertices": 2, "edges": [
        {"from": 0, "to": 1, "re": 1.0, "im": 1.0},
        {"from": 1, "to": 0, "re": 1.0, "im": -1.0},
    ]}
    graph, shape = FormatManager.parse_graph(data)
    assert shape is None
    assert graph.edge_list() == [(0, 1, 1 + 1j)]


def test_parse_graph_rejects_inconsistent_reverse_edge():
    data = {"vertices": 2, "edges": [
        {"from": 0, "to": 1, "re": 1.0, "im": 1.0},
        {"from": 1, "to": 0, "re": 1.0, "im": 1.0},
    ]}
    with pytest.raises(InvalidWeightError):
        FormatManager.parse_graph(data)


@pytest.mark.parametrize("data, error", [
    ([], FormatError),
    ({"edges": []}, FormatError),
    ({"vertices": 2, "edges": {}}, FormatError),
    ({"vertices": 2, "edges": [{"from": 0, "to": 1}]}, FormatError),
    ({"vertices": 2, "edges": [{"from": 0, "to": 1, "re": "1"}]}, FormatError),
    ({"vertices": 2, "edges": [], "shape": [2]}, FormatError),
    ({"vertices": 2, "edges": [{"from": 0, "to": 5, "re": 1}]}, VertexIndexError),
    ({"vertices": 2, "edges": [{"from": 0, "to": 1, "re": 0}]}, InvalidWeightError),
])
def test_parse_graph_rejects(data, error):
    with pytest.raises(error):
        FormatManager.parse_graph(data)


# ===== Lectura de matrices densidad =====

def test_parse_density_accepts_objects_and_numbers():
    data = {"order": 2, "entries": [[0.5, {"re": 0, "im": 0.5}], [{"re": 0, "im": -0.5}, 0.5]]}
    rho = FormatManager.parse_density(data)
    np.testing.assert_array_equal(rho.entries, [[0.5, 0.5j], [-0.5j, 0.5]])


@pytest.mark.parametrize("data", [
    {"order": 2, "entries": [[1, 0]]},
    {"order": 2, "entries": [[1, 0], [0]]},
    {"order": 2, "entries": [[1, 0], [0, {"im": 1}]]},
    {"entries": []},
])
def test_parse_density_rejects_structure(data):
    with pytest.raises(FormatError):
        FormatManager.parse_density(data)


def test_parse_density_rejects_non_density():
    with pytest.raises(DensityMatrixError):
        FormatManager.parse_density({"order": 2, "entries": [[1, 0], [0, 1]]})


def test_load_json_reports_format_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(FormatError) as info:
        FormatManager.load_json(bad)
    assert info.value.code == "malformed_input"
    with pytest.raises(FormatError):
        FormatManager.load_json(tmp_path / "missing.json")


# ===== Escritura =====

def test_graph_dict_roundtrip(rng, make_graph):
    for _ in range(20):
        graph = make_graph(rng, 6)
        data = json.loads(FormatManager.dumps(FormatManager.graph_to_dict(graph, (2, 3))))
        again, shape = FormatManager.parse_graph(data)
        assert shape == (2, 3)
        assert again.equals(graph, tol=0.0)


def test_density_dict_roundtrip():
    rho = np.array([[0.5, 0.25j], [-0.25j, 0.5]])
    data = json.loads(FormatManager.dumps(FormatManager.density_to_dict(rho)))
    np.testing.assert_array_equal(FormatManager.parse_density(data).entries, rho)


def test_dumps_is_deterministic():
    value = {"b": [1, 2.5, True, None], "a": {"x": -0.0, "y": 0.1}}
    assert FormatManager.dumps(value) == '{"b": [1, 2.5, true, null], "a": {"x": 0, "y": 0.10000000000000001}}'
    assert FormatManager.dumps(value) == FormatManager.dumps(value)


def test_dumps_writes_numpy_scalars():
    assert FormatManager.dumps([np.float64(0.5), np.int64(3), np.bool_(False)]) == "[0.5, 3, false]"


@pytest.mark.parametrize("value", [float("nan"), float("inf"), {"x": [float("-inf")]}, object()])
def test_dumps_rejects(value):
    with pytest.raises(FormatError):
        FormatManager.dumps(value)


# ===== DOT =====

def test_to_dot_single_edge():
    graph = WeightedDigraph.empty(2).add_edge(0, 1, 1 - 2j)
    assert ExportManager.to_dot(graph) == (
        "digraph G {\n"
        '  0 [label="v_0"];\n'
        '  1 [label="v_1"];\n'
        '  0 -> 1 [label="1-2i", dir=both];\n'
        "}\n"
    )


def test_clustered_dot_has_subgraphs_and_loops():
    graph = WeightedDigraph.empty(4).add_edge(0, 3, 0.5).add_edge(2, 2, -1)
    text = ExportManager.clustered_to_dot(ClusteredGraph(graph, 2, 2))
    assert "subgraph cluster_1 {" in text
    assert "subgraph cluster_2 {" in text
    assert '3 [label="v_{2,2}"];' in text
    assert '0 -> 3 [label="0.5+0i", dir=both];' in text
    assert '2 -> 2 [label="-1+0i"];' in text
    assert text.count("->") == 2


# ===== Reportes =====

def test_criterion_report_roundtrip():
    report = StateGenerator.werner_discord_verdict(WernerParams(d=3, x=0.7))
    assert report.failures
    again = CriterionReport.from_dict(json.loads(FormatManager.dumps(report.to_dict())))
    assert again.kind is report.kind
    assert again.failures == report.failures
    assert again.verdict is False
