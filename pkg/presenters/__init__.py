"""
Presentadores (lógica de coordinación)
"""

from .cli_presenter import CliPresenter

__all__ = ['CliPresenter']
