"""
Gestor de configuración del análisis.

Las opciones se resuelven en capas: valores por defecto, archivo de
configuración explícito (--settings) y flags de la línea de comandos.
"""

import json
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from models.enums import Language, LaplacianKind
from models.errors import FormatError

logger = logging.getLogger(__name__)


@dataclass
class AnalysisSettings:
    """
    Configuración de una ejecución de la CLI.
    """
    # Tipo de Laplaciano ("laplacian" o "signless")
    kind: str = LaplacianKind.SIGNLESS.label

    # Tolerancia absoluta de las comprobaciones estructurales y del oráculo
    tol: float = 1e-9

    # Puntos por ángulo en la malla de discordia
    grid: int = 64

    # Detenerse en el primer grupo de condiciones con violaciones
    fail_fast: bool = False

    # Sin resumen legible en stderr
    quiet: bool = False

    # Idioma del resumen
    language: str = Language.ENGLISH.value

    @property
    def laplacian_kind(self) -> LaplacianKind:
        return LaplacianKind.from_label(self.kind)

    @property
    def language_enum(self) -> Language:
        return Language(self.language)

    def to_dict(self):
        """Convierte la configuración a diccionario"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict):
        """
        Crea una instancia desde un diccionario.

        Raises:
            FormatError: claves desconocidas o valores fuera de dominio
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise FormatError(f"Claves de configuración desconocidas: {', '.join(unknown)}", {"keys": unknown})
        settings = cls(**data)
        settings.validate()
        return settings

    def validate(self) -> None:
        """
        Raises:
            FormatError: valor de tipo incorrecto o fuera de dominio
        """
        for name, expected in (("kind", str), ("language", str), ("fail_fast", bool), ("quiet", bool)):
            value = getattr(self, name)
            if not isinstance(value, expected):
                raise FormatError(
                    f"'{name}' debe ser de tipo {expected.__name__}, no {type(value).__name__}",
                    {"key": name, "type": type(value).__name__},
                )
        try:
            LaplacianKind.from_label(self.kind)
            Language(self.language)
        except ValueError as e:
            raise FormatError(str(e), {"kind": self.kind, "language": self.language}) from e

        if isinstance(self.tol, bool) or not isinstance(self.tol, (int, float)) or not self.tol > 0:
            raise FormatError(f"La tolerancia debe ser un número positivo, no {self.tol!r}", {"key": "tol"})
        if isinstance(self.grid, bool) or not isinstance(self.grid, int) or self.grid < 1:
            raise FormatError(f"La malla debe ser un entero positivo, no {self.grid!r}", {"key": "grid"})


class SettingsManager:
    """
    Gestor estático para cargar la configuración y combinarla con los flags.
    """

    # Flags de la CLI que sobreescriben la configuración (nombre del atributo en args)
    _FLAG_FIELDS = {
        "kind": "kind",
        "tol": "tol",
        "grid": "grid",
        "fail_fast": "fail_fast",
        "quiet": "quiet",
        "lang": "language",
    }

    @classmethod
    def load(cls, path: Optional[Path]) -> AnalysisSettings:
        """
        Carga la configuración desde un archivo JSON explícito.

        Returns:
            Configuración cargada, o valores por defecto si path es None

        Raises:
            FormatError: archivo ilegible, JSON inválido o claves desconocidas
        """
        if path is None:
            return AnalysisSettings()

        path = Path(path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except OSError as e:
            raise FormatError(f"No se pudo leer {path}: {e.strerror}", {"path": str(path)}) from e
        except json.JSONDecodeError as e:
            raise FormatError(f"JSON inválido en {path}: {e.msg}", {"path": str(path), "line": e.lineno}) from e

        if not isinstance(data, dict):
            raise FormatError("La configuración debe ser un objeto JSON", {"path": str(path)})
        logger.info("Configuración cargada desde %s", path)
        return AnalysisSettings.from_dict(data)

    @classmethod
    def resolve(cls, args) -> AnalysisSettings:
        """
        Combina los valores por defecto, el archivo --settings y los flags
        explícitos (los flags no indicados valen None y no sobreescriben).
        """
        settings = cls.load(getattr(args, "settings", None))
        data = settings.to_dict()
        for flag, field_name in cls._FLAG_FIELDS.items():
            value = getattr(args, flag, None)
            if value is not None:
                data[field_name] = value
        return AnalysisSettings.from_dict(data)
