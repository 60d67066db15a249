# -*- coding: utf-8 -*-
"""
Servicio de clusters: bloques de adyacencia y de densidad, subgrafos
inducidos y cruzados, y el álgebra de soportes y vecindades.
"""

import logging
from typing import Dict

import networkx as nx
import numpy as np

from models.clustered_graph import BlockFamily, ClusteredGraph, IndexSet, Neighborhood
from models.enums import LaplacianKind
from models.errors import ShapeError, VertexIndexError
from models.weighted_digraph import WEIGHT, ZERO_WEIGHT_TOL, WeightedDigraph
from services.density_service import DensityService

logger = logging.getLogger(__name__)


class ClusteringService:
    """
    Operaciones sobre un ClusteredGraph. Los clusters y posiciones empiezan en 1.
    """

    # ===== BLOQUES =====

    @staticmethod
    def adjacency_block(cg: ClusteredGraph, mu: int, nu: int) -> np.ndarray:
        """A_{mu,nu}: entrada (i, j) = w(v_{mu,i}, v_{nu,j})"""
        rows, cols = ClusteringService._cluster_nodes(cg, mu), ClusteringService._cluster_nodes(cg, nu)
        return cg.graph.adjacency_matrix()[rows.start:rows.stop, cols.start:cols.stop]

    @classmethod
    def adjacency_blocks(cls, cg: ClusteredGraph) -> BlockFamily:
        """Todos los bloques A_{mu,nu} como familia (m, m, n, n)"""
        return BlockFamily.from_matrix(cg.graph.adjacency_matrix(), cg.m, cg.n)

    @staticmethod
    def cluster_degrees(cg: ClusteredGraph, mu: int) -> np.ndarray:
        """Grados d_{mu,1..n} en el grafo completo"""
        cg.check_cluster(mu)
        start = (mu - 1) * cg.n
        return cg.graph.degrees()[start:start + cg.n]

    @classmethod
    def density_blocks(cls, cg: ClusteredGraph, kind: LaplacianKind = LaplacianKind.SIGNLESS) -> BlockFamily:
        """
        B_{mu,nu} = s A_{mu,nu} / d  (mu != nu)
        B_{mu,mu} = (D_mu + s A_{mu,mu}) / d

        con d la traza del Laplaciano elegido.

        Raises:
            ZeroTraceError: propagado desde la traza
        """
        d = DensityService.laplacian_trace(cg.graph, kind)
        s = kind.sign
        blocks = cls.adjacency_blocks(cg).blocks * s
        for mu in cg.clusters():
            blocks[mu - 1, mu - 1] += np.diag(cls.cluster_degrees(cg, mu))
        logger.debug("Bloques de densidad %dx%d de orden %d, d = %.6g", cg.m, cg.m, cg.n, d)
        return BlockFamily(blocks / d)

    @staticmethod
    def assemble_blocks(family: BlockFamily) -> np.ndarray:
        """Reensambla la matriz mn x mn"""
        return family.assemble()

    # ===== SUBGRAFOS =====

    @classmethod
    def cross_subgraph(cls, cg: ClusteredGraph, mu: int, nu: int) -> WeightedDigraph:
        """
        <C_mu, C_nu>: 2n vértices, adyacencia [[0, A_{mu,nu}], [A_{mu,nu}^+, 0]].
        Los vértices 0..n-1 son C_mu y n..2n-1 son C_nu.
        """
        if mu == nu:
            raise VertexIndexError(
                "El subgrafo cruzado necesita dos clusters distintos", {"mu": mu, "nu": nu}
            )
        first, second = cls._cluster_nodes(cg, mu), cls._cluster_nodes(cg, nu)
        graph = cg.graph.nx_graph
        cross = graph.edge_subgraph(
            [(a, b) for a, b in graph.edges if (a in first and b in second) or (a in second and b in first)]
        )
        mapping = {v: k for k, v in enumerate(first)}
        mapping.update({v: cg.n + k for k, v in enumerate(second)})
        return WeightedDigraph.from_networkx(nx.relabel_nodes(cross, mapping), 2 * cg.n)

    @classmethod
    def induced_subgraph(cls, cg: ClusteredGraph, mu: int) -> WeightedDigraph:
        """<C_mu>: n vértices con adyacencia A_{mu,mu}, lazos incluidos"""
        nodes = cls._cluster_nodes(cg, mu)
        induced = cg.graph.nx_graph.subgraph(nodes)
        return WeightedDigraph.from_networkx(
            nx.relabel_nodes(induced, {v: k for k, v in enumerate(nodes)}), cg.n
        )

    @staticmethod
    def _cluster_nodes(cg: ClusteredGraph, mu: int) -> range:
        cg.check_cluster(mu)
        return range((mu - 1) * cg.n, mu * cg.n)

    # ===== SOPORTES Y VECINDADES =====

    @staticmethod
    def support(vector) -> IndexSet:
        """Índices (desde 1) de las entradas con módulo > 1e-12"""
        a = np.asarray(vector, dtype=complex).ravel()
        return tuple(int(k) + 1 for k in np.flatnonzero(np.abs(a) > ZERO_WEIGHT_TOL))

    @classmethod
    def support_product(cls, a, b) -> complex:
        """
        Producto sobre la intersección de soportes, sin conjugar:
        sum_{k en nbd(a) y nbd(b)} a(k) b(k).

        Raises:
            ShapeError: longitudes distintas
        """
        a = np.asarray(a, dtype=complex).ravel()
        b = np.asarray(b, dtype=complex).ravel()
        if a.shape != b.shape:
            raise ShapeError(
                f"Longitudes distintas: {a.size} y {b.size}", {"len_a": int(a.size), "len_b": int(b.size)}
            )
        shared = set(cls.support(a)) & set(cls.support(b))
        return complex(sum(a[k - 1] * b[k - 1] for k in sorted(shared)))

    @staticmethod
    def out_neighborhood(cg: ClusteredGraph, mu: int, nu: int, i: int) -> Neighborhood:
        """
        Vecinos de salida de v_{mu,i} dentro de C_nu, con pesos w(v_{mu,i}, v_{nu,k}).
        Coincide con el soporte de la fila i de A_{mu,nu}.
        """
        cg.check_cluster(nu)
        row = cg.graph.out_edges(cg.vertex(mu, i))
        start = (nu - 1) * cg.n
        weights: Dict[int, complex] = {
            b - start + 1: w for b, w in row.items() if start <= b < start + cg.n
        }
        return Neighborhood(indices=tuple(sorted(weights)), weights=weights)

    @staticmethod
    def in_neighborhood(cg: ClusteredGraph, mu: int, nu: int, j: int) -> Neighborhood:
        """
        Vecinos de entrada de v_{nu,j} desde C_mu, con pesos w(v_{mu,k}, v_{nu,j}).
        Coincide con el soporte de la columna j de A_{mu,nu}.
        """
        cg.check_cluster(mu)
        predecessors = cg.graph.nx_graph.pred[cg.vertex(nu, j)]
        start = (mu - 1) * cg.n
        weights: Dict[int, complex] = {
            a - start + 1: data[WEIGHT] for a, data in predecessors.items() if start <= a < start + cg.n
        }
        return Neighborhood(indices=tuple(sorted(weights)), weights=weights)
