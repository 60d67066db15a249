# -*- coding: utf-8 -*-
"""
Modelos de la partición en clusters.

Un grafo de m*n vértices se parte en m clusters de n vértices. El vértice
v_{mu,i} (mu e i empiezan en 1) ocupa el índice plano (mu-1)*n + (i-1).
"""

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

import numpy as np

from models.errors import ShapeError, VertexIndexError
from models.weighted_digraph import WeightedDigraph

# Conjunto ordenado de índices 1..n (soporte de un vector o vecindad)
IndexSet = Tuple[int, ...]


@dataclass(frozen=True)
class Neighborhood:
    """Vecindad de un vértice dentro de un cluster, con los pesos por índice"""
    indices: IndexSet
    weights: Dict[int, complex]

    def weight(self, k: int) -> complex:
        return self.weights.get(k, 0j)

    def __contains__(self, k: int) -> bool:
        return k in self.weights


@dataclass(frozen=True)
class ClusteredGraph:
    """Dígrafo ponderado con m clusters de n vértices cada uno"""
    graph: WeightedDigraph
    m: int
    n: int

    # WeightedDigraph no es hashable
    __hash__ = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.m * self.n != self.graph.vertex_count:
            raise ShapeError(
                f"La forma {self.m}x{self.n} no cubre {self.graph.vertex_count} vértices",
                {"m": self.m, "n": self.n, "vertices": self.graph.vertex_count},
            )

    def vertex(self, mu: int, i: int) -> int:
        """Índice plano de v_{mu,i}"""
        self.check_cluster(mu)
        if not 1 <= i <= self.n:
            raise VertexIndexError(f"Posición {i} fuera de 1..{self.n}", {"i": i, "n": self.n})
        return (mu - 1) * self.n + (i - 1)

    def label(self, flat: int) -> Tuple[int, int]:
        """(mu, i) del índice plano"""
        if not 0 <= flat < self.graph.vertex_count:
            raise VertexIndexError(
                f"Vértice {flat} fuera de rango", {"vertex": flat, "vertex_count": self.graph.vertex_count}
            )
        mu, i = divmod(flat, self.n)
        return mu + 1, i + 1

    def weight(self, mu: int, i: int, nu: int, j: int) -> complex:
        """w(v_{mu,i}, v_{nu,j}) o 0"""
        return self.graph.weight(self.vertex(mu, i), self.vertex(nu, j))

    def check_cluster(self, mu: int) -> None:
        if not 1 <= mu <= self.m:
            raise VertexIndexError(f"Cluster {mu} fuera de 1..{self.m}", {"cluster": mu, "m": self.m})

    def clusters(self) -> range:
        return range(1, self.m + 1)

    def positions(self) -> range:
        return range(1, self.n + 1)

    def off_diagonal_pairs(self) -> Iterator[Tuple[int, int]]:
        """Pares ordenados (mu, nu) con mu != nu"""
        for mu in self.clusters():
            for nu in self.clusters():
                if mu != nu:
                    yield mu, nu


@dataclass(frozen=True, eq=False)
class BlockFamily:
    """
    Los m^2 bloques n x n de una matriz densidad agrupada.

    blocks tiene forma (m, m, n, n); blocks[mu-1, nu-1] es B_{mu,nu}.
    """
    blocks: np.ndarray

    def __post_init__(self):
        b = self.blocks
        if b.ndim != 4 or b.shape[0] != b.shape[1] or b.shape[2] != b.shape[3]:
            raise ShapeError("Los bloques deben tener forma (m, m, n, n)", {"shape": list(b.shape)})

    @property
    def m(self) -> int:
        return int(self.blocks.shape[0])

    @property
    def n(self) -> int:
        return int(self.blocks.shape[2])

    def block(self, mu: int, nu: int) -> np.ndarray:
        """B_{mu,nu} con índices de cluster desde 1"""
        if not (1 <= mu <= self.m and 1 <= nu <= self.m):
            raise VertexIndexError(f"Bloque ({mu}, {nu}) fuera de rango", {"mu": mu, "nu": nu, "m": self.m})
        return self.blocks[mu - 1, nu - 1]

    def items(self) -> Iterator[Tuple[Tuple[int, int], np.ndarray]]:
        for mu in range(1, self.m + 1):
            for nu in range(1, self.m + 1):
                yield (mu, nu), self.blocks[mu - 1, nu - 1]

    def assemble(self) -> np.ndarray:
        """Matriz mn x mn con los bloques en su posición"""
        m, n = self.m, self.n
        return self.blocks.transpose(0, 2, 1, 3).reshape(m * n, m * n)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, m: int, n: int) -> "BlockFamily":
        a = np.asarray(matrix, dtype=complex)
        if a.shape != (m * n, m * n):
            raise ShapeError(
                f"Una matriz {a.shape} no se puede partir en {m}x{m} bloques de orden {n}",
                {"shape": list(a.shape), "m": m, "n": n},
            )
        return cls(a.reshape(m, n, m, n).transpose(0, 2, 1, 3).copy())
