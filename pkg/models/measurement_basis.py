# -*- coding: utf-8 -*-
"""
Base de medida de von Neumann sobre el subsistema medido.
"""

from dataclasses import dataclass

import numpy as np

from models.errors import ParameterError

ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """
    Conjunto ortonormal de n vectores; vectors[k] es el k-ésimo vector.

    Los proyectores de rango 1 son |e_k><e_k|.
    """
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ParameterError("La base debe ser una matriz n x n", {"shape": list(v.shape)})
        gram = v.conj() @ v.T
        defect = float(np.max(np.abs(gram - np.eye(v.shape[0]))))
        if defect > ORTHONORMAL_TOL:
            raise ParameterError("La base de medida no es ortonormal", {"max_defect": defect})
        object.__setattr__(self, "vectors", v)

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[0])

    def projectors(self) -> np.ndarray:
        """Arreglo (n, n, n) con los proyectores |e_k><e_k|"""
        return np.einsum("ki,kj->kij", self.vectors, self.vectors.conj())

    @classmethod
    def computational(cls, n: int) -> "MeasurementBasis":
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "MeasurementBasis":
        """
        Base de un qubit parametrizada en la esfera de Bloch:
        |n> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> y su ortogonal.
        """
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        phase = np.exp(1j * phi)
        return cls(np.array([[c, phase * s], [-np.conj(phase) * s, c]], dtype=complex))
