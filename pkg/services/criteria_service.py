# -*- coding: utf-8 -*-
"""
Criterio estructural de discordia cero.

Cada comprobación compara, entrada a entrada, dos sumas sobre vecindades del
grafo agrupado. Las sumas equivalen a entradas de productos de bloques de
adyacencia, pero se calculan recorriendo solo las aristas existentes.

Los valores lhs/rhs se multiplican por `scale`. zero_discord_structural usa
scale = 1/d^2, con d la traza del Laplaciano, para que lhs y rhs sean
entradas de productos de bloques de la matriz densidad y la tolerancia tenga
el mismo significado que en el oráculo matricial.
"""

import logging
from typing import Callable, List, Tuple

import numpy as np

from models.clustered_graph import ClusteredGraph, Neighborhood
from models.criterion_report import CriterionFailure, CriterionReport
from models.enums import Condition, LaplacianKind
from models.errors import ParameterError
from services.clustering_service import ClusteringService
from services.density_service import DensityService

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9

# Igualdad etiquetada de subgrafos cruzados
SUBGRAPH_EQUALITY_TOL = 1e-12

ClusterPair = Tuple[int, int]


def neighborhood_sum(left: Neighborhood, right: Neighborhood) -> complex:
    """sum_{k en ambas vecindades} left(k) * right(k)"""
    if len(left.indices) > len(right.indices):
        left, right = right, left
    return complex(sum(left.weights[k] * right.weights[k] for k in left.indices if k in right))


class CriteriaService:
    """
    Comprobaciones del criterio y su combinación en un CriterionReport.

    Todas devuelven la lista de violaciones; lista vacía significa que la
    condición se cumple dentro de tol.
    """

    # ===== CONMUTATIVIDAD =====

    @classmethod
    def check_cross_commutativity(cls, cg: ClusteredGraph, first: ClusterPair, second: ClusterPair,
                                  tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        A_{mu,nu} A_{alpha,beta} = A_{alpha,beta} A_{mu,nu} entre dos subgrafos cruzados.
        """
        (mu, nu), (alpha, beta) = first, second
        cls._require_distinct(mu, nu)
        cls._require_distinct(alpha, beta)

        if first == second or cls._cross_empty(cg, mu, nu) or cls._cross_empty(cg, alpha, beta):
            return []
        if cls._cross_equal(cg, first, second):
            return []

        return cls._compare(
            cg, Condition.COMMUTATIVITY, (mu, nu, alpha, beta), tol, scale,
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, nu, i),
                ClusteringService.in_neighborhood(cg, alpha, beta, j),
            ),
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, alpha, beta, i),
                ClusteringService.in_neighborhood(cg, mu, nu, j),
            ),
        )

    @classmethod
    def check_diag_cross_commutativity(cls, cg: ClusteredGraph, mu: int, pair: ClusterPair,
                                       tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """A_{mu,mu} A_{alpha,beta} = A_{alpha,beta} A_{mu,mu}"""
        alpha, beta = pair
        cls._require_distinct(alpha, beta)
        cg.check_cluster(mu)
        if cls._cross_empty(cg, alpha, beta):
            return []

        return cls._compare(
            cg, Condition.COMMUTATIVITY, (mu, alpha, beta), tol, scale,
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, mu, i),
                ClusteringService.in_neighborhood(cg, alpha, beta, j),
            ),
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, alpha, beta, i),
                ClusteringService.in_neighborhood(cg, mu, mu, j),
            ),
        )

    @classmethod
    def check_diag_diag_commutativity(cls, cg: ClusteredGraph, mu: int, nu: int,
                                      tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """A_{mu,mu} A_{nu,nu} = A_{nu,nu} A_{mu,mu}"""
        cls._require_distinct(mu, nu)
        return cls._compare(
            cg, Condition.COMMUTATIVITY, (mu, nu), tol, scale,
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, mu, i),
                ClusteringService.in_neighborhood(cg, nu, nu, j),
            ),
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, nu, nu, i),
                ClusteringService.in_neighborhood(cg, mu, mu, j),
            ),
        )

    # ===== NORMALIDAD =====

    @classmethod
    def check_normality(cls, cg: ClusteredGraph, mu: int, nu: int,
                        tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        A A^+ = A^+ A para A = A_{mu,nu}.

        Una sola arista (v_{mu,p}, v_{nu,q}) es normal solo si p = q.
        """
        cls._require_distinct(mu, nu)
        if cls._cross_empty(cg, mu, nu):
            return []

        return cls._compare(
            cg, Condition.NORMALITY, (mu, nu), tol, scale,
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, nu, i),
                ClusteringService.in_neighborhood(cg, nu, mu, j),
            ),
            lambda i, j: neighborhood_sum(
                ClusteringService.out_neighborhood(cg, nu, mu, i),
                ClusteringService.in_neighborhood(cg, mu, nu, j),
            ),
        )

    # ===== CONDICIONES DE GRADO =====

    @classmethod
    def check_degree_condition_a(cls, cg: ClusteredGraph, kind: LaplacianKind, mu: int, nu: int,
                                 tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        Conmutación de los bloques diagonales B_{mu,mu} y B_{nu,nu}:

        s [w(v_nu,i, v_nu,j)(d_mu,i - d_mu,j) + w(v_mu,i, v_mu,j)(d_nu,j - d_nu,i)]
            + sum_k w(v_mu,i, v_mu,k) w(v_nu,k, v_nu,j)
          = sum_k w(v_nu,i, v_nu,k) w(v_mu,k, v_mu,j)
        """
        cls._require_distinct(mu, nu)
        s = kind.sign
        d_mu = ClusteringService.cluster_degrees(cg, mu)
        d_nu = ClusteringService.cluster_degrees(cg, nu)

        def lhs(i: int, j: int) -> complex:
            degree_term = (cg.weight(nu, i, nu, j) * (d_mu[i - 1] - d_mu[j - 1])
                           + cg.weight(mu, i, mu, j) * (d_nu[j - 1] - d_nu[i - 1]))
            return s * degree_term + neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, mu, i),
                ClusteringService.in_neighborhood(cg, nu, nu, j),
            )

        def rhs(i: int, j: int) -> complex:
            return neighborhood_sum(
                ClusteringService.out_neighborhood(cg, nu, nu, i),
                ClusteringService.in_neighborhood(cg, mu, mu, j),
            )

        return cls._compare(cg, Condition.DEGREE_A, (mu, nu), tol, scale, lhs, rhs)

    @classmethod
    def check_degree_condition_b(cls, cg: ClusteredGraph, kind: LaplacianKind, mu: int, pair: ClusterPair,
                                 tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        Conmutación de B_{mu,mu} con B_{alpha,beta}:

        w(v_alpha,i, v_beta,j)(d_mu,i - d_mu,j) + s sum_k w(v_mu,i, v_mu,k) w(v_alpha,k, v_beta,j)
          = s sum_k w(v_alpha,i, v_beta,k) w(v_mu,k, v_mu,j)
        """
        alpha, beta = pair
        cls._require_distinct(alpha, beta)
        if cls._cross_empty(cg, alpha, beta):
            return []
        s = kind.sign
        d_mu = ClusteringService.cluster_degrees(cg, mu)

        def lhs(i: int, j: int) -> complex:
            return cg.weight(alpha, i, beta, j) * (d_mu[i - 1] - d_mu[j - 1]) + s * neighborhood_sum(
                ClusteringService.out_neighborhood(cg, mu, mu, i),
                ClusteringService.in_neighborhood(cg, alpha, beta, j),
            )

        def rhs(i: int, j: int) -> complex:
            return s * neighborhood_sum(
                ClusteringService.out_neighborhood(cg, alpha, beta, i),
                ClusteringService.in_neighborhood(cg, mu, mu, j),
            )

        return cls._compare(cg, Condition.DEGREE_B, (mu, alpha, beta), tol, scale, lhs, rhs)

    @classmethod
    def simplified_degree_condition_a(cls, cg: ClusteredGraph, mu: int, nu: int,
                                      tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        Forma reducida de la condición a, válida cuando <C_mu> y <C_nu> ya conmutan:
        w(v_nu,i, v_nu,j)(d_mu,i - d_mu,j) + w(v_mu,i, v_mu,j)(d_nu,j - d_nu,i) = 0
        """
        cls._require_distinct(mu, nu)
        d_mu = ClusteringService.cluster_degrees(cg, mu)
        d_nu = ClusteringService.cluster_degrees(cg, nu)
        return cls._compare(
            cg, Condition.DEGREE_A, (mu, nu), tol, scale,
            lambda i, j: (cg.weight(nu, i, nu, j) * (d_mu[i - 1] - d_mu[j - 1])
                          + cg.weight(mu, i, mu, j) * (d_nu[j - 1] - d_nu[i - 1])),
            lambda i, j: 0j,
        )

    @classmethod
    def simplified_degree_condition_b(cls, cg: ClusteredGraph, mu: int, pair: ClusterPair,
                                      tol: float = DEFAULT_TOL, scale: float = 1.0) -> List[CriterionFailure]:
        """
        Forma reducida de la condición b, válida cuando <C_mu> y <C_alpha, C_beta> ya conmutan:
        w(v_alpha,i, v_beta,j)(d_mu,i - d_mu,j) = 0
        """
        alpha, beta = pair
        cls._require_distinct(alpha, beta)
        d_mu = ClusteringService.cluster_degrees(cg, mu)
        return cls._compare(
            cg, Condition.DEGREE_B, (mu, alpha, beta), tol, scale,
            lambda i, j: cg.weight(alpha, i, beta, j) * (d_mu[i - 1] - d_mu[j - 1]),
            lambda i, j: 0j,
        )

    # ===== CRITERIO COMPLETO =====

    @classmethod
    def zero_discord_structural(cls, cg: ClusteredGraph, kind: LaplacianKind = LaplacianKind.SIGNLESS,
                                tol: float = DEFAULT_TOL, fail_fast: bool = False) -> CriterionReport:
        """
        Decide si los bloques de rho(G) forman una familia de matrices normales
        que conmutan, usando solo la estructura del grafo.

        Orden: normalidad, conmutatividad entre bloques no diagonales,
        condición a (diagonal-diagonal), condición b (diagonal-no diagonal).
        Con fail_fast se detiene en el primer grupo con violaciones.

        Raises:
            ZeroTraceError: si rho(G) no está definida
        """
        d = DensityService.laplacian_trace(cg.graph, kind)
        scale = 1.0 / (d * d)
        report = CriterionReport(kind=kind, tol=tol)

        upper_pairs = [(mu, nu) for mu in cg.clusters() for nu in cg.clusters() if mu < nu]
        off_pairs = list(cg.off_diagonal_pairs())

        groups = [
            (Condition.NORMALITY, [
                lambda p=p: cls.check_normality(cg, p[0], p[1], tol, scale) for p in upper_pairs
            ]),
            (Condition.COMMUTATIVITY, [
                lambda a=a, b=b: cls.check_cross_commutativity(cg, a, b, tol, scale)
                for idx, a in enumerate(off_pairs) for b in off_pairs[idx + 1:]
                if b != (a[1], a[0])  # el par (A, A^+) es la normalidad
            ]),
            (Condition.DEGREE_A, [
                lambda p=p: cls.check_degree_condition_a(cg, kind, p[0], p[1], tol, scale) for p in upper_pairs
            ]),
            # [B_mu,mu, B_beta,alpha] = -[B_mu,mu, B_alpha,beta]^+ : basta alpha < beta
            (Condition.DEGREE_B, [
                lambda mu=mu, p=p: cls.check_degree_condition_b(cg, kind, mu, p, tol, scale)
                for mu in cg.clusters() for p in upper_pairs
            ]),
        ]

        for condition, checks in groups:
            found = 0
            for check in checks:
                failures = check()
                report.failures.extend(failures)
                found += len(failures)
            logger.debug("%s: %d comprobaciones, %d violaciones", condition.value, len(checks), found)
            if fail_fast and found:
                break

        logger.info(
            "Criterio estructural (%s, %dx%d): %s", kind.label, cg.m, cg.n,
            "discordia cero" if report.verdict else f"{len(report.failures)} violaciones",
        )
        return report

    # ===== MÉTODOS PRIVADOS =====

    @staticmethod
    def _compare(cg: ClusteredGraph, condition: Condition, clusters: Tuple[int, ...], tol: float, scale: float,
                 lhs: Callable[[int, int], complex], rhs: Callable[[int, int], complex]) -> List[CriterionFailure]:
        failures = []
        for i in cg.positions():
            for j in cg.positions():
                left = complex(lhs(i, j)) * scale
                right = complex(rhs(i, j)) * scale
                if abs(left - right) > tol:
                    failures.append(CriterionFailure(condition, clusters, i, j, left, right))
        return failures

    @staticmethod
    def _require_distinct(mu: int, nu: int) -> None:
        if mu == nu:
            raise ParameterError(
                f"Se esperaban dos clusters distintos, se recibió ({mu}, {nu})", {"mu": mu, "nu": nu}
            )

    @staticmethod
    def _cross_empty(cg: ClusteredGraph, mu: int, nu: int) -> bool:
        return not np.any(ClusteringService.adjacency_block(cg, mu, nu))

    @staticmethod
    def _cross_equal(cg: ClusteredGraph, first: ClusterPair, second: ClusterPair) -> bool:
        a = ClusteringService.adjacency_block(cg, *first)
        b = ClusteringService.adjacency_block(cg, *second)
        return bool(np.max(np.abs(a - b)) <= SUBGRAPH_EQUALITY_TOL)
