"""
Modelos de datos para Graph Laplacian States
"""

from .enums import LaplacianKind, Condition, Subsystem, IsotropicForm, Language
from .errors import (
    GraphLaplacianError,
    InvalidWeightError,
    VertexIndexError,
    ShapeError,
    DensityMatrixError,
    ZeroTraceError,
    NotGraphicalError,
    FormatError,
    ParameterError,
)
from .weighted_digraph import WeightedDigraph
from .density_matrix import DensityMatrix
from .clustered_graph import ClusteredGraph, BlockFamily, Neighborhood
from .criterion_report import CriterionFailure, CriterionReport
from .state_params import WernerParams, IsotropicParams, XStateSpec
from .measurement_basis import MeasurementBasis

__all__ = [
    'LaplacianKind',
    'Condition',
    'Subsystem',
    'IsotropicForm',
    'Language',
    'GraphLaplacianError',
    'InvalidWeightError',
    'VertexIndexError',
    'ShapeError',
    'DensityMatrixError',
    'ZeroTraceError',
    'NotGraphicalError',
    'FormatError',
    'ParameterError',
    'WeightedDigraph',
    'DensityMatrix',
    'ClusteredGraph',
    'BlockFamily',
    'Neighborhood',
    'CriterionFailure',
    'CriterionReport',
    'WernerParams',
    'IsotropicParams',
    'XStateSpec',
    'MeasurementBasis'
]
