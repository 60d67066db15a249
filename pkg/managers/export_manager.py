"""
Exportación de grafos a texto DOT (Graphviz).
"""

from typing import List, Optional, Tuple

from models.clustered_graph import ClusteredGraph
from models.weighted_digraph import WeightedDigraph


class ExportManager:
    """
    Gestor estático de exportación.
    """

    @staticmethod
    def format_weight(w: complex) -> str:
        """Peso como "re+im i" o "re-im i" """
        w = complex(w)
        sign = "-" if w.imag < 0 else "+"
        return f"{w.real:.6g}{sign}{abs(w.imag):.6g}i"

    @classmethod
    def vertex_label(cls, flat: int, shape: Optional[Tuple[int, int]] = None) -> str:
        """v_{mu,i} con clusters, v_k sin ellos"""
        if shape is None:
            return f"v_{flat}"
        mu, i = divmod(flat, shape[1])
        return f"v_{{{mu + 1},{i + 1}}}"

    @classmethod
    def to_dot(cls, graph: WeightedDigraph, shape: Optional[Tuple[int, int]] = None, name: str = "G") -> str:
        """
        Texto DOT del grafo. Cada par conjugado se dibuja una vez con
        dir=both; la etiqueta es w(from, to) con from <= to. Los lazos son
        aristas de un vértice a sí mismo.
        """
        lines: List[str] = [f"digraph {name} {{"]
        if shape is not None:
            m, n = shape
            for mu in range(m):
                lines.append(f"  subgraph cluster_{mu + 1} {{")
                lines.append(f'    label="C_{mu + 1}";')
                for i in range(n):
                    flat = mu * n + i
                    lines.append(f'    {flat} [label="{cls.vertex_label(flat, shape)}"];')
                lines.append("  }")
        else:
            for flat in range(graph.vertex_count):
                lines.append(f'  {flat} [label="{cls.vertex_label(flat)}"];')

        for i, j, w in graph.edge_list():
            direction = "" if i == j else ", dir=both"
            lines.append(f'  {i} -> {j} [label="{cls.format_weight(w)}"{direction}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def clustered_to_dot(cls, cg: ClusteredGraph, name: str = "G") -> str:
        return cls.to_dot(cg.graph, (cg.m, cg.n), name)
