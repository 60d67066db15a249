# -*- coding: utf-8 -*-
"""
Modelo del dígrafo ponderado con pesos complejos.

Cumple las dos suposiciones estructurales de la teoría:
1. Si (i, j) es arista entonces (j, i) también lo es, con w(j, i) = conj(w(i, j)).
2. Los lazos tienen peso real.

Los vértices son enteros contiguos 0..N-1. El almacenamiento es un
networkx.DiGraph congelado con el peso complejo en el atributo 'weight';
add_edge y remove_edge devuelven un grafo nuevo.
"""

from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from models.errors import InvalidWeightError, VertexIndexError

# Un peso de arista es un complejo distinto de cero (re, im)
ComplexWeight = complex

# Umbral para considerar nulo un peso construido (no introducido por el usuario)
ZERO_WEIGHT_TOL = 1e-12

# Atributo de arista con el peso complejo
WEIGHT = "weight"


class WeightedDigraph:
    """
    Dígrafo ponderado con pesos Hermíticos.

    Toda inserción pasa por las mismas comprobaciones (índices, peso no nulo,
    lazo real, inversa conjugada), también las del constructor.
    """

    # Contiene un grafo mutable de networkx: se compara por valor y no es hashable
    __hash__ = None

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int, complex]] = ()):
        """
        Args:
            vertex_count: número de vértices N >= 1
            edges: aristas (i, j, w); la inversa conjugada se agrega sola y,
                si también aparece, debe coincidir con conj(w)

        Raises:
            VertexIndexError: N no positivo o índice fuera de rango
            InvalidWeightError: peso nulo, lazo complejo o inversa inconsistente
        """
        if isinstance(vertex_count, bool) or not isinstance(vertex_count, (int, np.integer)) or vertex_count < 1:
            raise VertexIndexError(
                f"El número de vértices debe ser un entero positivo, no {vertex_count!r}",
                {"vertex_count": int(vertex_count) if isinstance(vertex_count, (int, np.integer)) else str(vertex_count)},
            )
        self._graph = nx.DiGraph()
        self._graph.add_nodes_from(range(int(vertex_count)))
        for i, j, w in edges:
            self._insert(i, j, w, replace=False)
        nx.freeze(self._graph)

    # ===== CONSTRUCCIÓN =====

    @classmethod
    def empty(cls, vertex_count: int) -> "WeightedDigraph":
        """Grafo sin aristas"""
        return cls(vertex_count)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, vertex_count: Optional[int] = None) -> "WeightedDigraph":
        """
        Lee un grafo de networkx con nodos enteros 0..N-1. Las aristas sin
        atributo 'weight' valen 1.
        """
        count = graph.number_of_nodes() if vertex_count is None else vertex_count
        return cls(count, graph.edges(data=WEIGHT, default=1.0))

    @classmethod
    def from_adjacency(cls, matrix, tol: float = ZERO_WEIGHT_TOL) -> "WeightedDigraph":
        """
        Lee cualquier matriz Hermítica de diagonal real como matriz de adyacencia.

        Args:
            matrix: matriz cuadrada compleja
            tol: entradas con módulo <= tol se consideran ausentes

        Raises:
            InvalidWeightError: si la matriz no es Hermítica o la diagonal no es real
        """
        a = np.asarray(matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidWeightError("La matriz de adyacencia debe ser cuadrada", {"shape": list(a.shape)})

        n = a.shape[0]
        edges: List[Tuple[int, int, complex]] = []
        for i in range(n):
            for j in range(i, n):
                w = complex(a[i, j])
                if abs(w) <= tol:
                    if abs(a[j, i]) > tol:
                        raise InvalidWeightError(
                            f"Entrada ({j}, {i}) sin conjugada en ({i}, {j})", {"i": i, "j": j}
                        )
                    continue
                if i == j:
                    if abs(w.imag) > tol:
                        raise InvalidWeightError(f"El lazo en {i} no es real: {w}", {"i": i})
                    edges.append((i, i, complex(w.real, 0.0)))
                    continue
                if abs(complex(a[j, i]) - w.conjugate()) > tol:
                    raise InvalidWeightError(
                        f"La matriz no es Hermítica en ({i}, {j})", {"i": i, "j": j}
                    )
                edges.append((i, j, w))
        return cls(n, edges)

    def add_edge(self, i: int, j: int, w: complex) -> "WeightedDigraph":
        """
        Agrega (o reemplaza) la arista (i, j) con peso w y su inversa conjugada.

        Raises:
            VertexIndexError: índice fuera de rango
            InvalidWeightError: peso nulo o lazo complejo
        """
        graph = self._thawed()
        graph._insert(i, j, w, replace=True)
        nx.freeze(graph._graph)
        return graph

    def remove_edge(self, i: int, j: int) -> "WeightedDigraph":
        """Elimina ambas direcciones de la arista (i, j) si existe"""
        self._check_vertex(i)
        self._check_vertex(j)
        graph = self._thawed()
        graph._graph.remove_edges_from([(i, j), (j, i)])
        nx.freeze(graph._graph)
        return graph

    # ===== CONSULTAS =====

    @property
    def vertex_count(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def nx_graph(self) -> nx.DiGraph:
        """El DiGraph congelado que guarda las aristas"""
        return self._graph

    def weight(self, i: int, j: int) -> complex:
        """Peso w(i, j), o 0 si la arista no existe"""
        data = self._graph.get_edge_data(i, j)
        return 0j if data is None else data[WEIGHT]

    def has_edge(self, i: int, j: int) -> bool:
        return self._graph.has_edge(i, j)

    def out_edges(self, i: int) -> Dict[int, complex]:
        """Pesos de salida de i: {j: w(i, j)}, lazo incluido"""
        self._check_vertex(i)
        return {j: data[WEIGHT] for j, data in self._graph.adj[i].items()}

    def edge_list(self) -> List[Tuple[int, int, complex]]:
        """Aristas con i <= j, ordenadas; cada par conjugado aparece una sola vez"""
        return sorted((i, j, w) for i, j, w in self._graph.edges(data=WEIGHT) if i <= j)

    def is_empty(self) -> bool:
        return self._graph.number_of_edges() == 0

    def is_simple(self) -> bool:
        """Grafo simple: todos los pesos valen 1 y no hay lazos"""
        return nx.number_of_selfloops(self._graph) == 0 and all(
            w == 1 for _, _, w in self._graph.edges(data=WEIGHT)
        )

    def equals(self, other: "WeightedDigraph", tol: float = ZERO_WEIGHT_TOL) -> bool:
        """Igualdad etiquetada: mismos vértices, mismas aristas, pesos iguales componente a componente"""
        if self.vertex_count != other.vertex_count or set(self._graph.edges) != set(other._graph.edges):
            return False
        for i, j, w in self._graph.edges(data=WEIGHT):
            v = other.weight(i, j)
            if abs(w.real - v.real) > tol or abs(w.imag - v.imag) > tol:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.equals(other, tol=0.0)

    def __repr__(self) -> str:
        return f"WeightedDigraph(vertex_count={self.vertex_count}, edges={self.edge_list()!r})"

    # ===== MATRICES =====

    def adjacency_matrix(self) -> np.ndarray:
        """A(G): a_ij = w(i, j) o 0. Hermítica por construcción"""
        return self._adjacency.copy()

    def degrees(self) -> np.ndarray:
        """Grados ponderados d_i = sum_j |a_ij| (el lazo cuenta una vez)"""
        return np.abs(self._adjacency).sum(axis=1)

    def degree(self, i: int) -> float:
        self._check_vertex(i)
        return float(self._degrees[i])

    def degree_matrix(self) -> np.ndarray:
        return np.diag(self._degrees).astype(complex)

    def laplacian(self) -> np.ndarray:
        """L(G) = D(G) - A(G)"""
        return self.degree_matrix() - self._adjacency

    def signless_laplacian(self) -> np.ndarray:
        """Q(G) = D(G) + A(G)"""
        return self.degree_matrix() + self._adjacency

    # ===== MÉTODOS PRIVADOS =====

    @cached_property
    def _adjacency(self) -> np.ndarray:
        return nx.to_numpy_array(
            self._graph, nodelist=list(range(self.vertex_count)), dtype=complex, weight=WEIGHT, nonedge=0.0
        )

    @cached_property
    def _degrees(self) -> np.ndarray:
        return self.degrees()

    def _thawed(self) -> "WeightedDigraph":
        """Copia con un DiGraph nuevo (sin congelar) y sin cachés"""
        graph = WeightedDigraph.__new__(WeightedDigraph)
        graph._graph = nx.DiGraph(self._graph)
        return graph

    def _insert(self, i: int, j: int, w: complex, replace: bool) -> None:
        self._check_vertex(i)
        self._check_vertex(j)
        w = complex(w)
        if w == 0:
            raise InvalidWeightError(f"La arista ({i}, {j}) no puede tener peso cero", {"i": int(i), "j": int(j)})
        if i == j and w.imag != 0:
            raise InvalidWeightError(
                f"El lazo en {i} debe tener peso real, no {w}", {"i": int(i), "re": w.real, "im": w.imag}
            )
        if not replace and self._graph.has_edge(j, i) and self._graph[j][i][WEIGHT] != w.conjugate():
            raise InvalidWeightError(
                f"La arista ({i}, {j}) no es la conjugada de ({j}, {i})", {"i": int(i), "j": int(j)}
            )
        self._graph.add_edge(int(i), int(j), weight=w)
        self._graph.add_edge(int(j), int(i), weight=w.conjugate())

    def _check_vertex(self, i: int) -> None:
        if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 0 <= i < self.vertex_count:
            raise VertexIndexError(
                f"Vértice {i!r} fuera de rango [0, {self.vertex_count})",
                {"vertex": int(i) if isinstance(i, (int, np.integer)) else str(i), "vertex_count": int(self.vertex_count)},
            )
