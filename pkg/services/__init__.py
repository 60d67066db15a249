"""
Servicios de negocio para Graph Laplacian States
"""

from .settings_manager import SettingsManager, AnalysisSettings
from .density_service import DensityService
from .clustering_service import ClusteringService
from .criteria_service import CriteriaService
from .oracle_service import OracleService
from .state_generator import StateGenerator

__all__ = [
    'SettingsManager',
    'AnalysisSettings',
    'DensityService',
    'ClusteringService',
    'CriteriaService',
    'OracleService',
    'StateGenerator'
]
