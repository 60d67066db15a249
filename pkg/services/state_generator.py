# -*- coding: utf-8 -*-
"""
Generadores de estados y comprobadores de discordia para tres familias:
estados de Werner, estados isotrópicos y estados X.

Los grafos se obtienen siempre por extracción canónica de la matriz densidad
(Laplaciano sin signo), de modo que rho(G) coincide con el estado exacto.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from models.clustered_graph import ClusteredGraph
from models.criterion_report import CriterionReport
from models.density_matrix import DensityMatrix
from models.enums import IsotropicForm, LaplacianKind
from models.errors import ParameterError
from models.state_params import IsotropicParams, WernerParams, XStateSpec
from models.weighted_digraph import WeightedDigraph
from services.clustering_service import ClusteringService
from services.criteria_service import DEFAULT_TOL, CriteriaService
from services.density_service import DensityService

logger = logging.getLogger(__name__)

# Igualdad de subgrafos cruzados y simetría de grados en estados X
XSTATE_EQUALITY_TOL = 1e-12
XSTATE_DEGREE_TOL = 1e-9

# Ramas de random_xstate_spec
BRANCH_SATISFYING = "satisfying"
BRANCH_UNEQUAL = "unequal"
BRANCH_DEGREE = "degree"
XSTATE_BRANCHES = (BRANCH_SATISFYING, BRANCH_UNEQUAL, BRANCH_DEGREE)


def flip_operator(d: int) -> np.ndarray:
    """F = sum_{i,j} |i><j| ⊗ |j><i|"""
    f = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            f[i * d + j, j * d + i] = 1.0
    return f


def fixed_block_ones(d: int) -> np.ndarray:
    """J = sum_{i,j} |ii><jj|; el proyector maximalmente entrelazado es J/d"""
    idx = [i * d + i for i in range(d)]
    j = np.zeros((d * d, d * d), dtype=complex)
    j[np.ix_(idx, idx)] = 1.0
    return j


class StateGenerator:
    """
    Estados de Werner, isotrópicos y X, con sus grafos y veredictos.
    """

    # ===== WERNER =====

    @staticmethod
    def werner_edge_classes(p: WernerParams) -> Tuple[float, float, float]:
        """
        Pesos sin normalizar (a, b, c) = ((d-1)(1+x), d-x, dx-1):
        diagonal de los vértices v_{mu,mu}, diagonal del resto y arista cruzada.
        El factor de normalización es 1/(d^3 - d).
        """
        d, x = p.d, p.x
        return (d - 1) * (1 + x), d - x, d * x - 1

    @staticmethod
    def werner_density(p: WernerParams) -> DensityMatrix:
        """rho = ((d - x) I + (x d - 1) F) / (d^3 - d)"""
        d, x = p.d, p.x
        rho = ((d - x) * np.eye(d * d) + (x * d - 1) * flip_operator(d)) / (d ** 3 - d)
        return DensityMatrix.from_array(rho)

    @classmethod
    def werner_graph(cls, p: WernerParams) -> ClusteredGraph:
        """Grafo canónico del estado de Werner, en d clusters de d vértices"""
        graph = DensityService.extract_graph(cls.werner_density(p), LaplacianKind.SIGNLESS)
        return ClusteredGraph(graph, p.d, p.d)

    @classmethod
    def werner_discord_verdict(cls, p: WernerParams, tol: float = DEFAULT_TOL) -> CriterionReport:
        """Criterio estructural; verdadero solo en x = 1/d"""
        return CriteriaService.zero_discord_structural(cls.werner_graph(p), LaplacianKind.SIGNLESS, tol)

    # ===== ISOTRÓPICOS =====

    @staticmethod
    def isotropic_density(p: IsotropicParams) -> DensityMatrix:
        """
        GRAPH:    rho ∝ (1-F)/d^2 I + (F - 1/d^2) J, normalizada por su traza
        STANDARD: rho = d^2/(d^2-1) [(1-F)/d^2 I + (F - 1/d^2) P], <psi|rho|psi> = F

        Raises:
            DensityMatrixError: en la forma GRAPH con F < 1/(d^2+d+1), donde
                la matriz deja de ser semidefinida positiva
        """
        d, f = p.d, p.F
        identity = np.eye(d * d, dtype=complex)
        if p.form is IsotropicForm.STANDARD:
            projector = fixed_block_ones(d) / d
            rho = d * d / (d * d - 1) * ((1 - f) / d ** 2 * identity + (f - 1 / d ** 2) * projector)
        else:
            m = (1 - f) / d ** 2 * identity + (f - 1 / d ** 2) * fixed_block_ones(d)
            rho = m / np.trace(m).real
        return DensityMatrix.from_array(rho)

    @staticmethod
    def isotropic_graphical_range(d: int, form: IsotropicForm = IsotropicForm.GRAPH) -> Tuple[float, float]:
        """
        Intervalo de F donde el estado isotrópico es representable como grafo.

        GRAPH:    [1/(d^2+d+1), min(1, 1/(d^2-d-1))]
        STANDARD: [0, min(1, 2/(d(d-1)))]
        """
        if d < 2:
            raise ParameterError(f"La dimensión debe ser >= 2, no {d}", {"d": d})
        if form is IsotropicForm.STANDARD:
            return 0.0, min(1.0, 2 / (d * (d - 1)))
        return 1 / (d * d + d + 1), min(1.0, 1 / (d * d - d - 1))

    @classmethod
    def isotropic_graph(cls, p: IsotropicParams) -> ClusteredGraph:
        """
        Grafo canónico del estado isotrópico.

        Raises:
            NotGraphicalError: F por encima del intervalo representable
            DensityMatrixError: F por debajo (solo forma GRAPH)
        """
        graph = DensityService.extract_graph(cls.isotropic_density(p), LaplacianKind.SIGNLESS)
        return ClusteredGraph(graph, p.d, p.d)

    @classmethod
    def isotropic_discord_verdict(cls, p: IsotropicParams, tol: float = DEFAULT_TOL) -> CriterionReport:
        """Criterio estructural; verdadero solo en F = 1/d^2"""
        return CriteriaService.zero_discord_structural(cls.isotropic_graph(p), LaplacianKind.SIGNLESS, tol)

    # ===== ESTADOS X =====

    @staticmethod
    def xstate_graph(spec: XStateSpec) -> ClusteredGraph:
        """
        Construye el grafo de un estado X. Los lazos de spec.loops se
        aplican al final y reemplazan cualquier lazo anterior del mismo vértice.
        """
        m, n = spec.m, spec.n
        graph = WeightedDigraph.empty(m * n)

        def flat(mu: int, i: int) -> int:
            return (mu - 1) * n + (i - 1)

        for (mu, nu), edges in sorted(spec.cross_edges.items()):
            for k, w in edges:
                graph = graph.add_edge(flat(mu, k), flat(nu, spec.partner(k)), w)
        if spec.diag_cluster is not None:
            alpha, edges = spec.diag_cluster
            for k, w in edges:
                graph = graph.add_edge(flat(alpha, k), flat(alpha, spec.partner(k)), w)
        for (mu, i), w in sorted(spec.loops.items()):
            graph = graph.add_edge(flat(mu, i), flat(mu, i), w)

        return ClusteredGraph(graph, m, n)

    @staticmethod
    def is_xstate(cg: ClusteredGraph) -> bool:
        """
        Reconoce las dos características combinatorias:
        1. toda arista cruzada (no lazo) es (v_{mu,k}, v_{nu,n+1-k});
        2. a lo sumo un cluster tiene aristas internas que no son lazos, y
           también son antidiagonales.
        """
        n = cg.n
        internal_clusters = set()
        for a, b, _ in cg.graph.edge_list():
            if a == b:
                continue
            (mu, i), (nu, j) = cg.label(a), cg.label(b)
            if j != n + 1 - i:
                return False
            if mu == nu:
                internal_clusters.add(mu)
        return len(internal_clusters) <= 1

    @classmethod
    def xstate_zero_discord(cls, cg: ClusteredGraph, kind: LaplacianKind = LaplacianKind.SIGNLESS,
                            tol: float = DEFAULT_TOL) -> bool:
        """
        Discordia cero de un estado X por sus condiciones combinatorias:
        1. todos los subgrafos cruzados no vacíos son iguales;
        2. cada cluster cumple d_{mu,i} = d_{mu,n+1-i}.

        <C_mu, C_nu> no tiene orientación: su bloque puede leerse como
        A_{mu,nu} o como A_{nu,mu} = A_{mu,nu}^+, y dos subgrafos son iguales
        si coinciden en alguna de las dos lecturas.

        Si el criterio por bloques discrepa se registra un WARNING y se
        devuelve el veredicto por bloques.

        Raises:
            ParameterError: si el grafo no es de un estado X
        """
        if not cls.is_xstate(cg):
            raise ParameterError("El grafo no tiene la estructura de un estado X", {"m": cg.m, "n": cg.n})

        blocks = [
            ClusteringService.adjacency_block(cg, mu, nu) for mu, nu in cg.off_diagonal_pairs() if mu < nu
        ]
        nonempty = [b for b in blocks if np.any(b)]
        equal_subgraphs = all(
            min(np.max(np.abs(b - nonempty[0])), np.max(np.abs(b - nonempty[0].conj().T))) <= XSTATE_EQUALITY_TOL
            for b in nonempty[1:]
        )

        symmetric_degrees = True
        for mu in cg.clusters():
            degrees = ClusteringService.cluster_degrees(cg, mu)
            if np.max(np.abs(degrees - degrees[::-1])) > XSTATE_DEGREE_TOL:
                symmetric_degrees = False
                break

        verdict = equal_subgraphs and symmetric_degrees
        structural = CriteriaService.zero_discord_structural(cg, kind, tol).verdict
        if structural != verdict:
            logger.warning(
                "Estado X %dx%d: el veredicto combinatorio (%s) difiere del criterio por bloques (%s)",
                cg.m, cg.n, verdict, structural,
            )
        logger.debug("Estado X: subgrafos iguales=%s, grados simétricos=%s", equal_subgraphs, symmetric_degrees)
        return structural

    @staticmethod
    def random_xstate_spec(rng: np.random.Generator, m: int, n: int, branch: str = BRANCH_SATISFYING,
                           with_diag_cluster: Optional[bool] = None) -> XStateSpec:
        """
        Especificación aleatoria de un estado X en una de tres ramas:

        satisfying: un mismo bloque antidiagonal real H = H^+ en todos los pares
            elegidos, lazos simétricos y cluster interno simétrico opcional;
        unequal: como satisfying, pero con el peso k=1 duplicado en un solo
            par, lo que rompe la igualdad A_{mu,nu} = A_{nu,mu};
        degree: como satisfying, con el lazo de la posición 1 de un cluster
            perturbado, lo que rompe la simetría de grados.
        """
        if branch not in XSTATE_BRANCHES:
            raise ParameterError(f"Rama desconocida {branch!r}", {"branch": branch})
        if m < 2 or n < 2:
            raise ParameterError("Se necesitan al menos 2 clusters de 2 vértices", {"m": m, "n": n})

        def magnitude() -> float:
            return float(rng.uniform(0.1, 2.0) * rng.choice([-1.0, 1.0]))

        def symmetric_weights() -> Dict[int, float]:
            weights: Dict[int, float] = {}
            for k in range(1, n // 2 + 1):
                weights[k] = weights[n + 1 - k] = magnitude()
            if n % 2:
                weights[(n + 1) // 2] = magnitude()
            return weights

        h = symmetric_weights()
        pairs = [(mu, nu) for mu in range(1, m + 1) for nu in range(mu + 1, m + 1)]
        count = int(rng.integers(1, len(pairs) + 1))
        chosen = [pairs[idx] for idx in sorted(rng.choice(len(pairs), size=count, replace=False))]

        cross: Dict[Tuple[int, int], List[Tuple[int, complex]]] = {
            pair: [(k, complex(h[k])) for k in range(1, n + 1)] for pair in chosen
        }

        diag = None
        if with_diag_cluster is None:
            with_diag_cluster = bool(rng.integers(0, 2))
        if with_diag_cluster:
            alpha = int(rng.integers(1, m + 1))
            inner = symmetric_weights()
            diag = (alpha, [(k, complex(inner[k])) for k in range(1, n // 2 + 1)])

        loops: Dict[Tuple[int, int], float] = {}
        for mu in range(1, m + 1):
            for k in range(1, n // 2 + 1):
                loops[(mu, k)] = loops[(mu, n + 1 - k)] = float(rng.uniform(0.1, 2.0))
            if n % 2:
                loops[(mu, (n + 1) // 2)] = float(rng.uniform(0.1, 2.0))

        if branch == BRANCH_UNEQUAL:
            mu, nu = chosen[0]
            cross[(mu, nu)] = [(k, 2 * w if k == 1 else w) for k, w in cross[(mu, nu)]]
        elif branch == BRANCH_DEGREE:
            mu = int(rng.integers(1, m + 1))
            loops[(mu, 1)] += float(rng.uniform(0.1, 1.0))

        return XStateSpec(m=m, n=n, cross_edges=cross, diag_cluster=diag, loops=loops)
