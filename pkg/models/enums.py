"""
Enumeraciones para Graph Laplacian States.
"""

from enum import Enum


class LaplacianKind(Enum):
    """
    Tipo de Laplaciano usado para construir la matriz densidad.

    El valor es el signo s de las ecuaciones por bloques:
    s = -1 para rho_l (combinatorio), s = +1 para rho_q (sin signo).
    """
    COMBINATORIAL = -1  # L(G) = D(G) - A(G)
    SIGNLESS = 1        # Q(G) = D(G) + A(G)

    @property
    def sign(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        """Nombre usado en la CLI y en los reportes JSON"""
        return "laplacian" if self is LaplacianKind.COMBINATORIAL else "signless"

    @classmethod
    def from_label(cls, label: str) -> "LaplacianKind":
        for kind in cls:
            if kind.label == label:
                return kind
        raise ValueError(f"Tipo de Laplaciano desconocido: {label!r}")


class Condition(Enum):
    """Condiciones del criterio estructural de discordia cero"""
    NORMALITY = "normality"
    COMMUTATIVITY = "commutativity"
    DEGREE_A = "degree_a"        # bloques diagonales entre sí
    DEGREE_B = "degree_b"        # bloque diagonal contra bloque no diagonal


class Subsystem(Enum):
    """Factor del producto tensorial que se traza en una traza parcial"""
    FIRST = "first"
    SECOND = "second"


class IsotropicForm(Enum):
    """
    Variante del estado isotrópico.

    GRAPH usa el proyector con entradas unitarias en el bloque fijo por el
    intercambio (la forma cuyo grafo tiene pesos F - 1/d^2); STANDARD usa el
    proyector normalizado y cumple <psi|rho|psi> = F.
    """
    GRAPH = "graph"
    STANDARD = "standard"


class Language(Enum):
    """Idiomas soportados para los resúmenes legibles"""
    ENGLISH = "en"
    SPANISH = "es"
