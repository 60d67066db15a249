"""
Interfaz de consola para Graph Laplacian States
"""

from .console_view import ConsoleView

__all__ = ['ConsoleView']
