# -*- coding: utf-8 -*-
"""
Parámetros de las familias de estados: Werner, isotrópicos y estados X.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.enums import IsotropicForm
from models.errors import ParameterError


@dataclass(frozen=True)
class WernerParams:
    """Estado de Werner d x d con parámetro x en [0, 1]"""
    d: int = 2
    x: float = 0.5

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ParameterError(f"La dimensión debe ser un entero >= 2, no {self.d}", {"d": self.d})
        if not 0.0 <= self.x <= 1.0:
            raise ParameterError(f"x debe estar en [0, 1], no {self.x}", {"x": self.x})

    def to_dict(self) -> dict:
        return {"d": self.d, "x": self.x}

    @classmethod
    def from_dict(cls, data: dict) -> "WernerParams":
        return cls(d=int(data.get("d", 2)), x=float(data.get("x", 0.5)))


@dataclass(frozen=True)
class IsotropicParams:
    """
    Estado isotrópico d x d con fidelidad F en [0, 1].

    form elige el proyector usado (ver IsotropicForm).
    """
    d: int = 2
    F: float = 0.25
    form: IsotropicForm = IsotropicForm.GRAPH

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ParameterError(f"La dimensión debe ser un entero >= 2, no {self.d}", {"d": self.d})
        if not 0.0 <= self.F <= 1.0:
            raise ParameterError(f"F debe estar en [0, 1], no {self.F}", {"F": self.F})

    def to_dict(self) -> dict:
        return {"d": self.d, "F": self.F, "form": self.form.value}

    @classmethod
    def from_dict(cls, data: dict) -> "IsotropicParams":
        return cls(
            d=int(data.get("d", 2)),
            F=float(data.get("F", 0.25)),
            form=IsotropicForm(data.get("form", "graph")),
        )


# (k, peso): arista (v_{mu,k}, v_{nu,n+1-k})
AntiDiagonalEdge = Tuple[int, complex]


@dataclass
class XStateSpec:
    """
    Descripción combinatoria de un estado X con m clusters de n vértices.

    cross_edges[(mu, nu)] lista las aristas (v_{mu,k}, v_{nu,n+1-k});
    diag_cluster = (alpha, aristas) es el único cluster con aristas internas,
    también antidiagonales; loops[(mu, i)] es el peso real del lazo en v_{mu,i}.
    """
    m: int = 2
    n: int = 2
    cross_edges: Dict[Tuple[int, int], List[AntiDiagonalEdge]] = field(default_factory=dict)
    diag_cluster: Optional[Tuple[int, List[AntiDiagonalEdge]]] = None
    loops: Dict[Tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError(f"Forma inválida {self.m}x{self.n}", {"m": self.m, "n": self.n})
        for (mu, nu), edges in self.cross_edges.items():
            self._check_cluster(mu)
            self._check_cluster(nu)
            if mu == nu:
                raise ParameterError(
                    f"cross_edges no admite el par diagonal ({mu}, {nu}); use diag_cluster",
                    {"mu": mu, "nu": nu},
                )
            for k, _ in edges:
                self._check_position(k)
        if self.diag_cluster is not None:
            alpha, edges = self.diag_cluster
            self._check_cluster(alpha)
            for k, _ in edges:
                self._check_position(k)
        for (mu, i) in self.loops:
            self._check_cluster(mu)
            self._check_position(i)

    def partner(self, k: int) -> int:
        """Índice emparejado antidiagonalmente con k"""
        return self.n + 1 - k

    def to_dict(self) -> dict:
        """Convierte la especificación a diccionario para serialización"""
        def edge_list(edges):
            return [{"k": k, "re": complex(w).real, "im": complex(w).imag} for k, w in edges]

        data = {
            "shape": [self.m, self.n],
            "cross_edges": [
                {"clusters": [mu, nu], "edges": edge_list(edges)}
                for (mu, nu), edges in sorted(self.cross_edges.items())
            ],
            "loops": [
                {"cluster": mu, "i": i, "weight": w} for (mu, i), w in sorted(self.loops.items())
            ],
        }
        if self.diag_cluster is not None:
            alpha, edges = self.diag_cluster
            data["diag_cluster"] = {"cluster": alpha, "edges": edge_list(edges)}
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "XStateSpec":
        """
        Crea una especificación desde un diccionario.

        diag_cluster puede venir como objeto o como lista; una lista con más
        de un cluster no vacío se rechaza.
        """
        def parse_edges(items) -> List[AntiDiagonalEdge]:
            return [(int(e["k"]), complex(float(e.get("re", 0.0)), float(e.get("im", 0.0)))) for e in items]

        m, n = (int(v) for v in data.get("shape", [2, 2]))

        cross: Dict[Tuple[int, int], List[AntiDiagonalEdge]] = {}
        for entry in data.get("cross_edges", []):
            mu, nu = (int(c) for c in entry["clusters"])
            cross.setdefault((mu, nu), []).extend(parse_edges(entry.get("edges", [])))

        diag_raw = data.get("diag_cluster")
        if isinstance(diag_raw, dict):
            diag_raw = [diag_raw]
        nonempty = [d for d in (diag_raw or []) if d.get("edges")]
        if len(nonempty) > 1:
            raise ParameterError(
                "Un estado X admite un solo cluster con aristas internas",
                {"clusters": [int(d["cluster"]) for d in nonempty]},
            )
        diag = None
        if nonempty:
            diag = (int(nonempty[0]["cluster"]), parse_edges(nonempty[0]["edges"]))

        loops = {(int(e["cluster"]), int(e["i"])): float(e["weight"]) for e in data.get("loops", [])}
        return cls(m=m, n=n, cross_edges=cross, diag_cluster=diag, loops=loops)

    def _check_cluster(self, mu: int) -> None:
        if not 1 <= mu <= self.m:
            raise ParameterError(f"Cluster {mu} fuera de 1..{self.m}", {"cluster": mu})

    def _check_position(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise ParameterError(f"Posición {k} fuera de 1..{self.n}", {"k": k})
