# -*- coding: utf-8 -*-
"""
Servicio de matrices densidad de grafos.

Construye rho(G) a partir de L(G) o Q(G), decide si una matriz densidad tiene
representación como grafo (dominancia diagonal con módulos) y extrae el grafo
canónico de una matriz representable.
"""

import logging

import numpy as np
from scipy import linalg

from models.density_matrix import DensityMatrix
from models.enums import LaplacianKind
from models.errors import DensityMatrixError, NotGraphicalError, ZeroTraceError
from models.weighted_digraph import ZERO_WEIGHT_TOL, WeightedDigraph

logger = logging.getLogger(__name__)

# Margen de dominancia diagonal por debajo del cual no se crea lazo
MARGIN_TOL = 1e-12

# Autovalor mínimo admitido para L(G)/tr o Q(G)/tr
PSD_TOL = 1e-10


class DensityService:
    """
    Operaciones entre grafos y matrices densidad.
    """

    @staticmethod
    def laplacian_matrix(graph: WeightedDigraph, kind: LaplacianKind) -> np.ndarray:
        """L(G) o Q(G) según kind"""
        if kind is LaplacianKind.COMBINATORIAL:
            return graph.laplacian()
        return graph.signless_laplacian()

    @classmethod
    def laplacian_trace(cls, graph: WeightedDigraph, kind: LaplacianKind) -> float:
        """
        Traza del Laplaciano elegido.

        Raises:
            ZeroTraceError: si la traza no es positiva
        """
        trace = float(np.trace(cls.laplacian_matrix(graph, kind)).real)
        if trace <= ZERO_WEIGHT_TOL:
            raise ZeroTraceError(
                f"El Laplaciano {kind.label} tiene traza {trace:.6g}; no se puede normalizar",
                {"kind": kind.label, "trace": trace},
            )
        return trace

    @classmethod
    def from_graph(cls, graph: WeightedDigraph, kind: LaplacianKind = LaplacianKind.SIGNLESS) -> DensityMatrix:
        """
        rho(G) = M / tr(M) con M = L(G) o Q(G).

        Raises:
            ZeroTraceError: grafo vacío o lazos que cancelan la traza
            DensityMatrixError: autovalor negativo más allá de la tolerancia
        """
        trace = cls.laplacian_trace(graph, kind)
        rho = cls.laplacian_matrix(graph, kind) / trace

        smallest = float(linalg.eigvalsh(rho)[0])
        if smallest < -PSD_TOL:
            raise DensityMatrixError(
                f"rho({kind.label}) no es semidefinida positiva (autovalor {smallest:.6g})",
                {"kind": kind.label, "eigenvalue": smallest},
            )

        logger.debug("rho(%s) construida: orden %d, traza sin normalizar %.6g", kind.label, graph.vertex_count, trace)
        return DensityMatrix.from_array(rho)

    @staticmethod
    def graphical_margins(rho) -> np.ndarray:
        """Márgenes rho_ii - sum_{j != i} |rho_ij| de cada fila"""
        a = np.asarray(rho, dtype=complex)
        moduli = np.abs(a)
        off_diagonal = moduli.sum(axis=1) - np.abs(np.diag(a))
        return np.diag(a).real - off_diagonal

    @classmethod
    def is_graphical(cls, rho) -> bool:
        """True si rho tiene representación como grafo"""
        return bool(np.min(cls.graphical_margins(rho)) >= -MARGIN_TOL)

    @classmethod
    def extract_graph(cls, rho, kind: LaplacianKind = LaplacianKind.SIGNLESS) -> WeightedDigraph:
        """
        Grafo canónico G con rho(G) = rho.

        Aristas w(i, j) = s * rho_ij; lazo en i de peso s * margen / 2 cuando
        el margen supera MARGIN_TOL. Con esta elección la traza del Laplaciano
        del grafo extraído vale 1.

        Raises:
            NotGraphicalError: con la primera fila de margen negativo
        """
        a = np.asarray(rho, dtype=complex)
        margins = cls.graphical_margins(a)
        failing = np.flatnonzero(margins < -MARGIN_TOL)
        if failing.size:
            row = int(failing[0])
            raise NotGraphicalError(
                f"La fila {row} no cumple la dominancia diagonal (margen {margins[row]:.6g})",
                {"row": row, "margin": float(margins[row])},
            )

        s = kind.sign
        n = a.shape[0]
        edges = []
        kept_moduli = np.zeros(n)
        for i in range(n):
            for j in range(i + 1, n):
                if abs(a[i, j]) > ZERO_WEIGHT_TOL:
                    w = complex(s * a[i, j])
                    edges.append((i, j, w))
                    kept_moduli[i] += abs(w)
                    kept_moduli[j] += abs(w)

        loops = 0
        for i in range(n):
            margin = float(a[i, i].real) - kept_moduli[i]
            if margin > MARGIN_TOL:
                edges.append((i, i, complex(s * margin / 2, 0.0)))
                loops += 1

        logger.debug("Grafo extraído (%s): %d aristas, %d lazos", kind.label, len(edges) - loops, loops)
        return WeightedDigraph(n, edges)
