# -*- coding: utf-8 -*-
"""
Modelo de la matriz densidad: Hermítica, semidefinida positiva y de traza 1.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from models.errors import DensityMatrixError

# Tolerancia de los tres invariantes (Hermítica, PSD, traza)
DENSITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Matriz densidad compleja de orden N.

    Se construye con from_array, que valida los invariantes. El constructor
    directo no valida y queda para código interno que ya lo garantiza.
    """
    entries: np.ndarray

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def from_array(cls, array, tol: float = DENSITY_TOL) -> "DensityMatrix":
        """
        Crea una matriz densidad validada.

        Raises:
            DensityMatrixError: si algún invariante no se cumple
        """
        entries = np.array(array, dtype=complex)
        entries.setflags(write=False)
        rho = cls(entries)
        rho.validate(tol)
        return rho

    @classmethod
    def maximally_mixed(cls, order: int) -> "DensityMatrix":
        """Estado máximamente mezclado I/N"""
        if order < 1:
            raise DensityMatrixError(f"Orden inválido: {order}", {"order": order})
        return cls.from_array(np.eye(order, dtype=complex) / order)

    def validate(self, tol: float = DENSITY_TOL) -> None:
        """
        Comprueba los tres invariantes.

        Raises:
            DensityMatrixError: con el detalle del primer invariante violado
        """
        a = self.entries
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DensityMatrixError("La matriz densidad debe ser cuadrada", {"shape": list(a.shape)})

        if not linalg.ishermitian(a, atol=tol):
            raise DensityMatrixError(
                "La matriz no es Hermítica",
                {"max_defect": float(np.max(np.abs(a - a.conj().T)))},
            )

        trace = complex(np.trace(a))
        if abs(trace - 1) > tol:
            raise DensityMatrixError(
                f"La traza debe ser 1, no {trace.real:.12g}",
                {"trace": trace.real},
            )

        smallest = self.min_eigenvalue()
        if smallest < -tol:
            raise DensityMatrixError(
                f"La matriz no es semidefinida positiva (autovalor {smallest:.6g})",
                {"eigenvalue": smallest},
            )

    def eigenvalues(self) -> np.ndarray:
        """Autovalores en orden ascendente"""
        return linalg.eigvalsh(self.entries)

    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues()[0])

    def is_close(self, other: "DensityMatrix", tol: float = 1e-12) -> bool:
        """Igualdad entrada a entrada dentro de tol"""
        if self.entries.shape != other.entries.shape:
            return False
        return bool(np.max(np.abs(self.entries - other.entries)) <= tol)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)
