# -*- coding: utf-8 -*-
"""
Oráculo matricial: bloques de la matriz densidad, criterio de familia de
matrices normales que conmutan y cantidades entrópicas hasta una estimación
de la discordia por búsqueda en malla.

La discordia se mide sobre el segundo factor (n); las entropías están en bits.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy import linalg

from models.clustered_graph import BlockFamily
from models.density_matrix import DensityMatrix
from models.enums import Subsystem
from models.errors import DensityMatrixError, ShapeError
from models.measurement_basis import MeasurementBasis

logger = logging.getLogger(__name__)

# Autovalores en [-CLIP_TOL, 0) se tratan como 0 antes del logaritmo
CLIP_TOL = 1e-10

# Resultados de medida con probabilidad menor no contribuyen
PROBABILITY_TOL = 1e-14

DEFAULT_GRID = 64

Defect = Tuple[Tuple[int, int], Tuple[int, int], float]


def _max_modulus(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def _entropy_from_eigenvalues(eigenvalues: np.ndarray) -> float:
    """-sum lambda log2 lambda con la ventana de recorte"""
    lam = np.asarray(eigenvalues, dtype=float)
    worst = float(lam.min()) if lam.size else 0.0
    if worst < -CLIP_TOL:
        raise DensityMatrixError(
            f"Autovalor negativo {worst:.6g} fuera de la ventana de recorte", {"eigenvalue": worst}
        )
    if worst < 0:
        logger.debug("Autovalor %.3g recortado a 0", worst)
    lam = np.clip(lam, 0.0, 1.0)
    nonzero = lam[lam > 0]
    return float(-np.sum(nonzero * np.log2(nonzero)))


def _measured_entropies(sigma: np.ndarray) -> np.ndarray:
    """
    p_k S(sigma_k / p_k) para una pila de estados sin normalizar sigma_k.

    Se usa -sum lambda log2 lambda + p log2 p sobre los autovalores de sigma_k
    para no dividir por probabilidades pequeñas.
    """
    p = np.trace(sigma, axis1=-2, axis2=-1).real
    eig = np.linalg.eigvalsh(sigma)
    worst = float(eig.min()) if eig.size else 0.0
    if worst < -CLIP_TOL:
        raise DensityMatrixError(
            f"Autovalor negativo {worst:.6g} tras la medida", {"eigenvalue": worst}
        )
    eig = np.clip(eig, 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(eig > 0, -eig * np.log2(eig), 0.0).sum(axis=-1)
        terms = terms + np.where(p > 0, p * np.log2(np.where(p > 0, p, 1.0)), 0.0)
    return np.where(p < PROBABILITY_TOL, 0.0, np.maximum(terms, 0.0))


class OracleService:
    """
    Verdad de referencia a nivel matricial.
    """

    # ===== BLOQUES =====

    @staticmethod
    def blocks_of_density(rho, m: int, n: int) -> BlockFamily:
        """
        B_{ij}: bloque (i, j) de n x n en la base producto.

        Raises:
            ShapeError: si el orden no es m*n
        """
        return BlockFamily.from_matrix(np.asarray(rho, dtype=complex), m, n)

    @staticmethod
    def commutator_defects(family: BlockFamily) -> List[Defect]:
        """
        Defectos ||B B^+ - B^+ B||_max de cada bloque (par (b, b)) y
        ||B B' - B' B||_max de cada par de bloques distintos.
        """
        items = list(family.items())
        defects: List[Defect] = []
        for idx, (key, block) in enumerate(items):
            h = block.conj().T
            defects.append((key, key, _max_modulus(block @ h - h @ block)))
            for other_key, other in items[idx + 1:]:
                defects.append((key, other_key, _max_modulus(block @ other - other @ block)))
        return defects

    @classmethod
    def is_commuting_normal_family(cls, family: BlockFamily, tol: float = 1e-9) -> bool:
        """True si cada bloque es normal y todos los pares conmutan dentro de tol"""
        blocks = family.blocks.reshape(-1, family.n, family.n)
        adjoint = blocks.conj().transpose(0, 2, 1)
        if _max_modulus(blocks @ adjoint - adjoint @ blocks) >= tol:
            return False
        # products[a, b] = B_a B_b
        products = np.einsum("aij,bjk->abik", blocks, blocks)
        return _max_modulus(products - products.transpose(1, 0, 2, 3)) < tol

    # ===== TRAZA PARCIAL Y ENTROPÍAS =====

    @staticmethod
    def partial_trace(rho, m: int, n: int, side: Subsystem) -> DensityMatrix:
        """
        Traza parcial sobre el factor indicado por side.

        side=SECOND devuelve rho_a (orden m); side=FIRST devuelve rho_b (orden n).
        """
        a = np.asarray(rho, dtype=complex)
        if a.shape != (m * n, m * n):
            raise ShapeError(
                f"Una matriz {a.shape} no es de orden {m}*{n}", {"shape": list(a.shape), "m": m, "n": n}
            )
        t = a.reshape(m, n, m, n)
        if side is Subsystem.SECOND:
            reduced = np.einsum("ikjk->ij", t)
        else:
            reduced = np.einsum("kikj->ij", t)
        return DensityMatrix.from_array(reduced)

    @staticmethod
    def von_neumann_entropy(rho) -> float:
        """S(rho) = -sum lambda log2 lambda"""
        return _entropy_from_eigenvalues(linalg.eigvalsh(np.asarray(rho, dtype=complex)))

    @classmethod
    def mutual_information(cls, rho, m: int, n: int) -> float:
        """I(rho) = S(rho_a) + S(rho_b) - S(rho)"""
        rho_a = cls.partial_trace(rho, m, n, Subsystem.SECOND)
        rho_b = cls.partial_trace(rho, m, n, Subsystem.FIRST)
        return cls.von_neumann_entropy(rho_a) + cls.von_neumann_entropy(rho_b) - cls.von_neumann_entropy(rho)

    @classmethod
    def conditional_information(cls, rho, m: int, n: int, basis: MeasurementBasis) -> float:
        """
        I(rho|Pi^b) = S(rho_a) - sum_k p_k S(rho_k) midiendo el segundo factor
        con los proyectores de basis.
        """
        if basis.dimension != n:
            raise ShapeError(
                f"La base mide dimensión {basis.dimension}, el subsistema medido tiene {n}",
                {"basis": basis.dimension, "n": n},
            )
        a = np.asarray(rho, dtype=complex)
        rho_a = cls.partial_trace(a, m, n, Subsystem.SECOND)

        # <e_k| aplicado al segundo factor: sigma_k = (I ⊗ <e_k|) rho (I ⊗ |e_k>), orden m
        t = a.reshape(m, n, m, n)
        bras = basis.vectors.conj()
        sigma = np.einsum("kb,ibjc,kc->kij", bras, t, basis.vectors)

        conditional = float(_measured_entropies(sigma).sum())
        return cls.von_neumann_entropy(rho_a) - conditional

    @classmethod
    def discord_estimate(cls, rho, m: int, n: int = 2, grid_resolution: int = DEFAULT_GRID) -> float:
        """
        Mínimo en malla de I(rho) - I(rho|Pi^b) sobre bases de un qubit,
        theta en [0, pi/2] y phi en [0, 2 pi). Es una cota superior de la
        discordia, con precisión limitada por la malla.

        Raises:
            ShapeError: si el subsistema medido no es un qubit
        """
        if n != 2:
            raise ShapeError(
                f"La estimación de discordia solo admite n = 2 (recibido n = {n})", {"n": n}
            )
        if grid_resolution < 1:
            raise ShapeError("La malla necesita al menos un punto", {"grid": grid_resolution})

        a = np.asarray(rho, dtype=complex)
        mutual = cls.mutual_information(a, m, n)
        s_a = cls.von_neumann_entropy(cls.partial_trace(a, m, n, Subsystem.SECOND))

        thetas = np.linspace(0.0, np.pi / 2, grid_resolution)
        phis = np.linspace(0.0, 2 * np.pi, grid_resolution, endpoint=False)
        theta, phi = (g.ravel() for g in np.meshgrid(thetas, phis, indexing="ij"))

        c, s = np.cos(theta / 2), np.sin(theta / 2)
        phase = np.exp(1j * phi)
        # bases[g, k] = k-ésimo vector de la base g
        bases = np.empty((theta.size, 2, 2), dtype=complex)
        bases[:, 0, 0], bases[:, 0, 1] = c, phase * s
        bases[:, 1, 0], bases[:, 1, 1] = -np.conj(phase) * s, c

        t = a.reshape(m, n, m, n)
        sigma = np.einsum("gkb,ibjc,gkc->gkij", bases.conj(), t, bases)
        conditional = _measured_entropies(sigma).sum(axis=1)

        gaps = mutual - (s_a - conditional)
        best = int(np.argmin(gaps))
        estimate = max(float(gaps[best]), 0.0)
        logger.info(
            "Discordia estimada %.6g (malla %d, theta=%.4f, phi=%.4f)",
            estimate, grid_resolution, theta[best], phi[best],
        )
        return estimate

    # ===== ESTADOS AUXILIARES =====

    @staticmethod
    def measurement_basis_from_angles(theta: float, phi: float) -> MeasurementBasis:
        return MeasurementBasis.from_angles(theta, phi)

    @staticmethod
    def classical_quantum_state(probabilities, a_states, pointer_basis: Optional[MeasurementBasis] = None) -> DensityMatrix:
        """
        sum_k p_k rho_k ⊗ |e_k><e_k|, con |e_k> la base puntero del segundo factor
        (computacional por defecto). Tiene discordia cero medida sobre ese factor.
        """
        p = np.asarray(probabilities, dtype=float)
        states = [np.asarray(s, dtype=complex) for s in a_states]
        if len(states) != p.size:
            raise ShapeError(
                "Se necesita un estado por probabilidad", {"probabilities": int(p.size), "states": len(states)}
            )
        basis = pointer_basis or MeasurementBasis.computational(p.size)
        if basis.dimension != p.size:
            raise ShapeError("La base puntero no coincide con el número de términos",
                             {"basis": basis.dimension, "terms": int(p.size)})
        projectors = basis.projectors()
        rho = sum(pk * np.kron(sk, projectors[k]) for k, (pk, sk) in enumerate(zip(p, states)))
        return DensityMatrix.from_array(rho)
