# -*- coding: utf-8 -*-
"""
Modelo del reporte del criterio estructural de discordia cero.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models.enums import Condition, LaplacianKind


def complex_to_dict(z: complex) -> dict:
    """Un complejo como {"re": x, "im": y}"""
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_dict(data: dict) -> complex:
    return complex(float(data.get("re", 0.0)), float(data.get("im", 0.0)))


@dataclass(frozen=True)
class CriterionFailure:
    """
    Una violación concreta de una condición.

    clusters guarda (mu, nu) para normalidad y condición a, (mu, nu, alpha, beta)
    para conmutatividad y (mu, alpha, beta) para la condición b.
    Los índices i, j empiezan en 1.
    """
    condition: Condition
    clusters: Tuple[int, ...]
    i: int
    j: int
    lhs: complex
    rhs: complex

    @property
    def defect(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> dict:
        return {
            "condition": self.condition.value,
            "clusters": list(self.clusters),
            "i": self.i,
            "j": self.j,
            "lhs": complex_to_dict(self.lhs),
            "rhs": complex_to_dict(self.rhs),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CriterionFailure":
        return cls(
            condition=Condition(data["condition"]),
            clusters=tuple(int(c) for c in data.get("clusters", [])),
            i=int(data["i"]),
            j=int(data["j"]),
            lhs=complex_from_dict(data["lhs"]),
            rhs=complex_from_dict(data["rhs"]),
        )


@dataclass
class CriterionReport:
    """
    Veredicto del criterio con todas las violaciones encontradas.

    verdict es True si y solo si failures está vacío.
    """
    kind: LaplacianKind = LaplacianKind.SIGNLESS

    # Violaciones en el orden en que se evaluaron
    failures: List[CriterionFailure] = field(default_factory=list)

    # Tolerancia usada
    tol: float = 1e-9

    @property
    def verdict(self) -> bool:
        return not self.failures

    def first_failure(self, condition: Optional[Condition] = None) -> Optional[CriterionFailure]:
        """Primera violación (opcionalmente de una condición concreta)"""
        for failure in self.failures:
            if condition is None or failure.condition is condition:
                return failure
        return None

    def failed_conditions(self) -> List[Condition]:
        """Condiciones con al menos una violación, sin repetir"""
        seen: List[Condition] = []
        for failure in self.failures:
            if failure.condition not in seen:
                seen.append(failure.condition)
        return seen

    def to_dict(self) -> dict:
        """Convierte el reporte a diccionario para serialización"""
        return {
            "verdict": self.verdict,
            "kind": self.kind.label,
            "failures": [f.to_dict() for f in self.failures],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CriterionReport":
        """Crea un reporte desde un diccionario"""
        return cls(
            kind=LaplacianKind.from_label(data.get("kind", "signless")),
            failures=[CriterionFailure.from_dict(f) for f in data.get("failures", [])],
        )
