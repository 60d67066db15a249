# -*- coding: utf-8 -*-
"""
Graph Laplacian States - punto de entrada de la CLI.

Uso:
    python main.py gen werner --d 3 --x 0.5
    python main.py discord-structure grafo.json --clusters 3 3 --kind signless
    python main.py oracle rho.json --clusters 2 2 --estimate-discord

Códigos de salida: 0 éxito (veredicto verdadero), 1 veredicto falso,
2 error de entrada o validación.
"""

import argparse
import logging
import sys
import traceback
from typing import List, Optional

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"

logger = logging.getLogger("graph_laplacian")


def build_parser() -> argparse.ArgumentParser:
    """Parser con un subcomando por invocación; los flags comunes valen en cualquier posición"""
    common = argparse.ArgumentParser(add_help=False)
    # default=None: un flag ausente no sobreescribe el archivo --settings
    common.add_argument("--kind", choices=["laplacian", "signless"], default=None,
                        help="Laplaciano usado para rho(G) (por defecto: signless)")
    common.add_argument("--clusters", nargs=2, type=int, metavar=("M", "N"), default=None,
                        help="m clusters de n vértices")
    common.add_argument("--tol", type=float, default=None, help="tolerancia absoluta (por defecto: 1e-9)")
    common.add_argument("--fail-fast", action="store_true", default=None,
                        help="detenerse en el primer grupo de condiciones violado")
    common.add_argument("--quiet", action="store_true", default=None, help="sin resumen en stderr")
    common.add_argument("--grid", type=int, default=None, help="puntos por ángulo de la malla (por defecto: 64)")
    common.add_argument("--settings", default=None, help="archivo JSON de configuración")
    common.add_argument("--lang", choices=["en", "es"], default=None, help="idioma del resumen")
    common.add_argument("--output", default=None, help="escribir el reporte en un archivo")
    common.add_argument("--verbose", action="store_true", help="logs de nivel INFO")
    common.add_argument("--debug", action="store_true", help="logs de nivel DEBUG")

    parser = argparse.ArgumentParser(
        prog="graph-laplacian",
        description="Estados Laplacianos de grafos y discordia cuántica cero",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generar un estado")
    families = gen.add_subparsers(dest="family", required=True)
    werner = families.add_parser("werner", parents=[common])
    werner.add_argument("--d", type=int, required=True)
    werner.add_argument("--x", type=float, required=True)
    isotropic = families.add_parser("isotropic", parents=[common])
    isotropic.add_argument("--d", type=int, required=True)
    isotropic.add_argument("--F", type=float, required=True)
    isotropic.add_argument("--form", choices=["graph", "standard"], default="graph")
    xstate = families.add_parser("xstate", parents=[common])
    xstate.add_argument("--spec", required=True, help="especificación JSON del estado X")
    for family in (werner, isotropic, xstate):
        family.add_argument("--density", action="store_true", help="emitir la matriz densidad en lugar del grafo")

    for name, text in (
        ("check-state", "¿es la matriz densidad un estado Laplaciano de grafo?"),
        ("from-graph", "matriz densidad de un grafo"),
        ("discord-structure", "criterio estructural de discordia cero"),
        ("oracle", "criterio matricial y estimación de discordia"),
        ("export-dot", "exportar el grafo en formato DOT"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("input", help="archivo JSON ('-' para stdin)")
        if name == "oracle":
            sub.add_argument("--estimate-discord", action="store_true",
                             help="estimar la discordia (solo n = 2)")

    return parser


def configure_logging(verbose: bool, debug: bool) -> None:
    """Un único handler en stderr; por defecto WARNING"""
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta la CLI y devuelve el código de salida.

    Los errores de validación los resuelve el presentador; cualquier otra
    excepción se convierte en un error "internal_error" con código 2.
    """
    from managers.format_manager import FormatManager
    from managers.localization_manager import LocalizationManager
    from models.errors import GraphLaplacianError
    from presenters.cli_presenter import EXIT_INPUT_ERROR, CliPresenter
    from services.settings_manager import SettingsManager
    from ui.console_view import ConsoleView

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.verbose, args.debug)

    try:
        settings = SettingsManager.resolve(args)
    except GraphLaplacianError as e:
        sys.stdout.write(FormatManager.dumps(e.to_dict()) + "\n")
        return EXIT_INPUT_ERROR

    view = ConsoleView(quiet=settings.quiet, output=args.output)
    try:
        return CliPresenter(view, settings).run(args)
    except Exception as e:
        return global_exception_handler(e, view, LocalizationManager)


def global_exception_handler(error: BaseException, view, localization) -> int:
    """
    Robustez: convierte un error no controlado en un objeto de error
    estructurado para que la CLI nunca termine sin reporte.
    """
    logger.error("Error inesperado: %s\n%s", error, "".join(traceback.format_exception(error)))
    view.show_error(
        {"error": "internal_error", "message": str(error), "details": {"type": type(error).__name__}},
        localization.get("error_internal").format(error),
    )
    return 2


def main():
    """Función principal"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
