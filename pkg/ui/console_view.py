"""
Vista de consola de la CLI.

Esta es la vista del patrón MVP: escribe el reporte JSON en stdout (o en el
archivo de --output) y el resumen legible en stderr. No contiene lógica de
negocio.
"""

import sys
from pathlib import Path
from typing import Any, Optional

from managers.format_manager import FormatManager
from managers.localization_manager import LocalizationManager


class ConsoleView:
    """
    Vista de la CLI.

    Responsabilidades:
    - Serializar el reporte de forma determinista
    - Separar el reporte (stdout) del resumen y los logs (stderr)
    """

    def __init__(self, quiet: bool = False, output: Optional[Path] = None):
        self.quiet = quiet
        self.output = Path(output) if output is not None else None

    def show_report(self, report: Any) -> None:
        """Escribe el reporte JSON"""
        self.show_text(FormatManager.dumps(report) + "\n")

    def show_text(self, text: str) -> None:
        """Escribe texto ya formateado (por ejemplo, DOT) en el destino del reporte"""
        if self.output is not None:
            with open(self.output, 'w', encoding='utf-8') as f:
                f.write(text)
            self.show_summary(LocalizationManager.get("report_written").format(self.output))
            return
        sys.stdout.write(text)
        sys.stdout.flush()

    def show_summary(self, message: str) -> None:
        """Resumen legible en stderr, salvo con --quiet"""
        if self.quiet:
            return
        sys.stderr.write(message + "\n")
        sys.stderr.flush()

    def show_error(self, error: dict, message: str) -> None:
        """Error estructurado en stdout y su mensaje en stderr"""
        sys.stdout.write(FormatManager.dumps(error) + "\n")
        sys.stdout.flush()
        self.show_summary(message)
