# -*- coding: utf-8 -*-
"""
Jerarquía de errores de Graph Laplacian States.

Todos los errores de validación heredan de GraphLaplacianError y se pueden
convertir en el objeto de error estructurado que imprime la CLI.
"""

from typing import Any, Dict, Optional


class GraphLaplacianError(ValueError):
    """Error base de validación (la CLI lo traduce a código de salida 2)"""

    code = "invalid_input"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict:
        """Convierte el error a diccionario para serialización"""
        return {
            "error": self.code,
            "message": self.message,
            "details": self.details,
        }


class InvalidWeightError(GraphLaplacianError):
    """Peso nulo, lazo complejo o arista inversa inconsistente"""
    code = "invalid_weight"


class VertexIndexError(GraphLaplacianError, IndexError):
    """Índice de vértice o de cluster fuera de rango"""
    code = "vertex_out_of_range"


class ShapeError(GraphLaplacianError):
    """Dimensiones incompatibles (m*n, longitudes, dimensión medida)"""
    code = "shape_mismatch"


class DensityMatrixError(GraphLaplacianError):
    """La matriz no es Hermítica, no es semidefinida positiva o no tiene traza 1"""
    code = "invalid_density_matrix"


class ZeroTraceError(DensityMatrixError):
    """El Laplaciano elegido tiene traza nula y no se puede normalizar"""
    code = "zero_trace"


class NotGraphicalError(GraphLaplacianError):
    """La matriz densidad no cumple la dominancia diagonal con módulos"""
    code = "not_graphical"


class FormatError(GraphLaplacianError):
    """JSON de entrada mal formado"""
    code = "malformed_input"


class ParameterError(GraphLaplacianError):
    """Parámetro de un generador o base de medida fuera de su dominio"""
    code = "invalid_parameter"
