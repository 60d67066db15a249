"""
Fixtures compartidas: generadores aleatorios con semilla fija para grafos,
grafos agrupados y matrices densidad representables como grafo.
"""

import numpy as np
import pytest

from models.clustered_graph import ClusteredGraph
from models.weighted_digraph import WeightedDigraph

SEED = 20240229


def random_weight(rng: np.random.Generator) -> complex:
    """Peso complejo con módulo en [0.1, 2] y fase uniforme"""
    return complex(rng.uniform(0.1, 2.0) * np.exp(1j * rng.uniform(0.0, 2 * np.pi)))


def random_loop(rng: np.random.Generator) -> float:
    return float(rng.uniform(0.1, 2.0) * rng.choice([-1.0, 1.0]))


def build_random_graph(rng: np.random.Generator, vertices: int, density: float = 0.3,
                       loop_density: float = 0.3) -> WeightedDigraph:
    """
    Grafo aleatorio con al menos una arista que no es lazo, de modo que
    L(G) y Q(G) tienen traza positiva.
    """
    graph = WeightedDigraph.empty(vertices)
    for i in range(vertices):
        if rng.random() < loop_density:
            graph = graph.add_edge(i, i, random_loop(rng))
        for j in range(i + 1, vertices):
            if rng.random() < density:
                graph = graph.add_edge(i, j, random_weight(rng))
    if all(i == j for i, j, _ in graph.edge_list()):
        i, j = sorted(rng.choice(vertices, size=2, replace=False))
        graph = graph.add_edge(int(i), int(j), random_weight(rng))
    return graph


def build_aligned_graph(rng: np.random.Generator, m: int, n: int, density: float = 0.5) -> ClusteredGraph:
    """
    Grafo agrupado cuyos bloques son todos diagonales: solo aristas
    (v_{mu,i}, v_{nu,i}) entre clusters y lazos. Sus bloques forman siempre
    una familia normal que conmuta.
    """
    graph = WeightedDigraph.empty(m * n)
    for mu in range(m):
        for i in range(n):
            if rng.random() < density:
                graph = graph.add_edge(mu * n + i, mu * n + i, random_loop(rng))
            for nu in range(mu + 1, m):
                if rng.random() < density:
                    graph = graph.add_edge(mu * n + i, nu * n + i, random_weight(rng))
    if all(i == j for i, j, _ in graph.edge_list()):
        graph = graph.add_edge(0, n, random_weight(rng))
    return ClusteredGraph(graph, m, n)


@pytest.fixture
def rng():
    """Generador con semilla fija; cada test recibe uno nuevo"""
    return np.random.default_rng(SEED)


@pytest.fixture
def make_graph():
    return build_random_graph


@pytest.fixture
def make_clustered():
    def factory(rng, m, n, density=0.3, loop_density=0.3):
        return ClusteredGraph(build_random_graph(rng, m * n, density, loop_density), m, n)
    return factory


@pytest.fixture
def make_aligned():
    return build_aligned_graph


@pytest.fixture
def single_edge_graph():
    """Dos vértices unidos por una arista de peso 1"""
    return WeightedDigraph.empty(2).add_edge(0, 1, 1)
