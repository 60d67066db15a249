"""
Gestores auxiliares para Graph Laplacian States
"""

from .localization_manager import LocalizationManager
from .format_manager import FormatManager
from .export_manager import ExportManager

__all__ = [
    'LocalizationManager',
    'FormatManager',
    'ExportManager'
]
