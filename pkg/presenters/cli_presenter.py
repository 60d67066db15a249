"""
Presentador de la CLI (lógica de coordinación).

Coordina entre la Vista (ConsoleView) y los Servicios: carga las entradas,
llama al servicio que corresponde al subcomando y devuelve el código de salida.
"""

import logging
from typing import Optional, Tuple

from models.clustered_graph import ClusteredGraph
from models.enums import IsotropicForm, LaplacianKind
from models.errors import GraphLaplacianError, ShapeError
from models.state_params import IsotropicParams, WernerParams, XStateSpec
from services.criteria_service import CriteriaService
from services.density_service import DensityService
from services.oracle_service import OracleService
from services.settings_manager import AnalysisSettings
from services.state_generator import StateGenerator
from managers.export_manager import ExportManager
from managers.format_manager import FormatManager
from managers.localization_manager import LocalizationManager

logger = logging.getLogger(__name__)

# Códigos de salida
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2


class CliPresenter:
    """
    Presentador de la CLI.

    Patrón MVP: el presentador coordina entre la vista y los servicios.
    NO conoce los detalles de la salida (stdout, archivos).
    """

    def __init__(self, view, settings: AnalysisSettings):
        """
        Inicializa el presentador con una vista.

        Args:
            view: Instancia de ConsoleView
            settings: Configuración ya resuelta
        """
        self.view = view
        self.settings = settings
        self.kind: LaplacianKind = settings.laplacian_kind
        LocalizationManager.set_language(settings.language_enum)

        self._handlers = {
            "gen": self._on_gen,
            "check-state": self._on_check_state,
            "from-graph": self._on_from_graph,
            "discord-structure": self._on_discord_structure,
            "oracle": self._on_oracle,
            "export-dot": self._on_export_dot,
        }

    def run(self, args) -> int:
        """
        Ejecuta un subcomando.

        Returns:
            0 éxito o veredicto verdadero, 1 veredicto falso, 2 error de entrada
        """
        try:
            return self._handlers[args.command](args)
        except GraphLaplacianError as e:
            logger.info("Entrada rechazada: %s", e.message)
            self.view.show_error(e.to_dict(), LocalizationManager.get("error").format(e.code, e.message))
            return EXIT_INPUT_ERROR

    # ===== SUBCOMANDOS =====

    def _on_gen(self, args) -> int:
        """gen werner | isotropic | xstate"""
        if args.family == "werner":
            params = WernerParams(d=args.d, x=args.x)
            cg = StateGenerator.werner_graph(params)
            rho = StateGenerator.werner_density(params)
        elif args.family == "isotropic":
            params = IsotropicParams(d=args.d, F=args.F, form=IsotropicForm(args.form))
            rho = StateGenerator.isotropic_density(params)
            cg = None if args.density else StateGenerator.isotropic_graph(params)
        else:
            spec = XStateSpec.from_dict(FormatManager.load_json(args.spec))
            cg = StateGenerator.xstate_graph(spec)
            rho = DensityService.from_graph(cg.graph, self.kind) if args.density else None

        if args.density:
            self.view.show_report(FormatManager.density_to_dict(rho))
            self.view.show_summary(LocalizationManager.get("density_generated").format(args.family, rho.order))
        else:
            self.view.show_report(FormatManager.graph_to_dict(cg.graph, (cg.m, cg.n)))
            self.view.show_summary(LocalizationManager.get("graph_generated").format(
                args.family, cg.m, cg.n, len(cg.graph.edge_list())))
        return EXIT_OK

    def _on_check_state(self, args) -> int:
        """Representabilidad como grafo de una matriz densidad"""
        rho = FormatManager.parse_density(FormatManager.load_json(args.input))
        margins = DensityService.graphical_margins(rho)
        graphical = DensityService.is_graphical(rho)

        report = {
            "graphical": graphical,
            "order": rho.order,
            "margins": [float(v) for v in margins],
        }
        if graphical:
            report["graph"] = FormatManager.graph_to_dict(DensityService.extract_graph(rho, self.kind))
            self.view.show_report(report)
            self.view.show_summary(LocalizationManager.get("graphical_true").format(rho.order))
            return EXIT_OK

        row = next(i for i, v in enumerate(margins) if v < -1e-12)
        report["first_failing_row"] = row
        self.view.show_report(report)
        self.view.show_summary(LocalizationManager.get("graphical_false").format(row, float(margins[row])))
        return EXIT_FALSE

    def _on_from_graph(self, args) -> int:
        graph, _ = FormatManager.parse_graph(FormatManager.load_json(args.input))
        rho = DensityService.from_graph(graph, self.kind)
        self.view.show_report(FormatManager.density_to_dict(rho))
        self.view.show_summary(LocalizationManager.get("density_built").format(
            rho.order, LocalizationManager.get(f"kind_{self.kind.label}")))
        return EXIT_OK

    def _on_discord_structure(self, args) -> int:
        """Veredicto estructural sobre un grafo agrupado"""
        graph, shape = FormatManager.parse_graph(FormatManager.load_json(args.input))
        m, n = self._resolve_shape(args, shape, graph.vertex_count)
        cg = ClusteredGraph(graph, m, n)

        report = CriteriaService.zero_discord_structural(
            cg, self.kind, self.settings.tol, self.settings.fail_fast
        )
        self.view.show_report(report.to_dict())

        kind_name = LocalizationManager.get(f"kind_{self.kind.label}")
        if report.verdict:
            self.view.show_summary(LocalizationManager.get("verdict_zero_discord").format(kind_name))
            return EXIT_OK

        conditions = ", ".join(LocalizationManager.get(f"condition_{c.value}") for c in report.failed_conditions())
        self.view.show_summary(
            LocalizationManager.get("verdict_nonzero_discord").format(len(report.failures), conditions))
        first = report.first_failure()
        self.view.show_summary(LocalizationManager.get("first_failure").format(
            LocalizationManager.get(f"condition_{first.condition.value}"),
            list(first.clusters), first.i, first.j, first.defect,
        ))
        return EXIT_FALSE

    def _on_oracle(self, args) -> int:
        """Veredicto matricial y, opcionalmente, estimación de discordia"""
        data = FormatManager.load_json(args.input)
        if isinstance(data, dict) and "entries" in data:
            rho = FormatManager.parse_density(data)
            shape = None
            source = "density"
        else:
            graph, shape = FormatManager.parse_graph(data)
            rho = DensityService.from_graph(graph, self.kind)
            source = "graph"
        m, n = self._resolve_shape(args, shape, rho.order)

        family = OracleService.blocks_of_density(rho, m, n)
        defects = OracleService.commutator_defects(family)
        verdict = OracleService.is_commuting_normal_family(family, self.settings.tol)
        worst = max((d for _, _, d in defects), default=0.0)

        report = {
            "verdict": verdict,
            "source": source,
            "shape": [m, n],
            "max_defect": worst,
            "defects": [
                {"blocks": [list(a), list(b)], "defect": d}
                for a, b, d in defects if d >= self.settings.tol
            ],
        }
        if source == "graph":
            report["kind"] = self.kind.label
        if args.estimate_discord:
            mutual = OracleService.mutual_information(rho, m, n)
            estimate = OracleService.discord_estimate(rho, m, n, self.settings.grid)
            report["mutual_information"] = mutual
            report["discord_estimate"] = estimate

        self.view.show_report(report)
        key = "oracle_true" if verdict else "oracle_false"
        self.view.show_summary(LocalizationManager.get(key).format(worst))
        if args.estimate_discord:
            self.view.show_summary(LocalizationManager.get("discord_estimate").format(
                report["discord_estimate"], self.settings.grid, report["mutual_information"]))
        return EXIT_OK if verdict else EXIT_FALSE

    def _on_export_dot(self, args) -> int:
        graph, shape = FormatManager.parse_graph(FormatManager.load_json(args.input))
        if args.clusters is not None:
            shape = tuple(args.clusters)
        if shape is not None:
            ClusteredGraph(graph, *shape)
        self.view.show_text(ExportManager.to_dot(graph, shape))
        self.view.show_summary(LocalizationManager.get("dot_written").format(graph.vertex_count))
        return EXIT_OK

    # ===== MÉTODOS PRIVADOS =====

    @staticmethod
    def _resolve_shape(args, shape: Optional[Tuple[int, int]], order: int) -> Tuple[int, int]:
        """--clusters tiene prioridad sobre el campo "shape" del JSON"""
        if getattr(args, "clusters", None) is not None:
            shape = tuple(args.clusters)
        if shape is None:
            raise ShapeError(
                "Se necesita la forma de los clusters (--clusters M N o \"shape\" en el JSON)",
                {"order": order},
            )
        m, n = shape
        if m < 1 or n < 1 or m * n != order:
            raise ShapeError(
                f"La forma {m}x{n} no corresponde a una matriz de orden {order}",
                {"m": m, "n": n, "order": order},
            )
        return m, n
