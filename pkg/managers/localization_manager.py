"""
Gestor de internacionalización (i18n) de los resúmenes legibles.
Los reportes JSON no dependen del idioma.
"""

from typing import Dict
from models.enums import Language


class LocalizationManager:
    """
    Gestor estático para el manejo de traducciones.
    Soporta inglés y español.
    """

    # Diccionarios de traducciones
    _ENGLISH: Dict[str, str] = {
        "kind_laplacian": "combinatorial Laplacian",
        "kind_signless": "signless Laplacian",
        "condition_normality": "normality",
        "condition_commutativity": "commutativity",
        "condition_degree_a": "degree condition (a)",
        "condition_degree_b": "degree condition (b)",
        "verdict_zero_discord": "Zero discord: the blocks of rho ({0}) form a commuting normal family.",
        "verdict_nonzero_discord": "Nonzero discord: {0} violation(s) of the structural criterion ({1}).",
        "first_failure": "First witness: {0} on clusters {1} at (i, j) = ({2}, {3}), |lhs - rhs| = {4:.3e}.",
        "graphical_true": "The density matrix of order {0} is a graph Laplacian state.",
        "graphical_false": "The density matrix is not graphical: row {0} has margin {1:.3e}.",
        "density_built": "Density matrix of order {0} built from the {1}.",
        "graph_generated": "Generated {0} graph with {1} clusters of {2} vertices ({3} edges).",
        "density_generated": "Generated {0} density matrix of order {1}.",
        "oracle_true": "Oracle: the blocks form a commuting normal family (max defect {0:.3e}).",
        "oracle_false": "Oracle: the blocks do not form a commuting normal family (max defect {0:.3e}).",
        "discord_estimate": "Estimated discord {0:.6f} bits (grid {1}); mutual information {2:.6f} bits.",
        "dot_written": "DOT graph with {0} vertices written.",
        "report_written": "Report written to {0}.",
        "error": "Error ({0}): {1}",
        "error_internal": "Unexpected error: {0}",
    }

    _SPANISH: Dict[str, str] = {
        "kind_laplacian": "Laplaciano combinatorio",
        "kind_signless": "Laplaciano sin signo",
        "condition_normality": "normalidad",
        "condition_commutativity": "conmutatividad",
        "condition_degree_a": "condición de grado (a)",
        "condition_degree_b": "condición de grado (b)",
        "verdict_zero_discord": "Discordia cero: los bloques de rho ({0}) forman una familia normal que conmuta.",
        "verdict_nonzero_discord": "Discordia no nula: {0} violación(es) del criterio estructural ({1}).",
        "first_failure": "Primer testigo: {0} en los clusters {1}, (i, j) = ({2}, {3}), |lhs - rhs| = {4:.3e}.",
        "graphical_true": "La matriz densidad de orden {0} es un estado Laplaciano de grafo.",
        "graphical_false": "La matriz densidad no es representable como grafo: la fila {0} tiene margen {1:.3e}.",
        "density_built": "Matriz densidad de orden {0} construida con el {1}.",
        "graph_generated": "Grafo {0} generado con {1} clusters de {2} vértices ({3} aristas).",
        "density_generated": "Matriz densidad {0} de orden {1} generada.",
        "oracle_true": "Oráculo: los bloques forman una familia normal que conmuta (defecto máximo {0:.3e}).",
        "oracle_false": "Oráculo: los bloques no forman una familia normal que conmuta (defecto máximo {0:.3e}).",
        "discord_estimate": "Discordia estimada {0:.6f} bits (malla {1}); información mutua {2:.6f} bits.",
        "dot_written": "Grafo DOT con {0} vértices escrito.",
        "report_written": "Reporte escrito en {0}.",
        "error": "Error ({0}): {1}",
        "error_internal": "Error inesperado: {0}",
    }

    # Estado actual
    _current_language: Language = Language.ENGLISH
    _current_dict: Dict[str, str] = _ENGLISH

    @classmethod
    def set_language(cls, language: Language) -> None:
        """
        Establece el idioma actual.

        Args:
            language: Idioma a establecer
        """
        cls._current_language = language
        if language == Language.SPANISH:
            cls._current_dict = cls._SPANISH
        else:
            cls._current_dict = cls._ENGLISH

    @classmethod
    def get(cls, key: str) -> str:
        """
        Obtiene la traducción de una clave.

        Args:
            key: Clave de la traducción

        Returns:
            String traducido, o la clave si no se encuentra
        """
        return cls._current_dict.get(key, key)

    @classmethod
    def get_current_language(cls) -> Language:
        """Obtiene el idioma actual"""
        return cls._current_language
