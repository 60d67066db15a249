"""
Codecs JSON de grafos, matrices densidad y reportes.

La salida es determinista: el orden de las claves es el de inserción y los
reales se escriben con 17 cifras significativas.
"""

import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np

from models.density_matrix import DensityMatrix
from models.errors import FormatError, InvalidWeightError
from models.weighted_digraph import WeightedDigraph

Shape = Tuple[int, int]


class FormatManager:
    """
    Gestor estático de lectura y escritura de JSON.
    """

    # ===== LECTURA =====

    @classmethod
    def load_json(cls, path) -> Any:
        """
        Lee un archivo JSON ("-" lee la entrada estándar).

        Raises:
            FormatError: archivo ilegible o JSON inválido
        """
        try:
            if str(path) == "-":
                return json.load(sys.stdin)
            with open(Path(path), 'r', encoding='utf-8') as f:
                return json.load(f)
        except OSError as e:
            raise FormatError(f"No se pudo leer {path}: {e.strerror}", {"path": str(path)}) from e
        except json.JSONDecodeError as e:
            raise FormatError(f"JSON inválido en {path}: {e.msg}", {"path": str(path), "line": e.lineno}) from e

    @classmethod
    def parse_graph(cls, data: Any) -> Tuple[WeightedDigraph, Optional[Shape]]:
        """
        Grafo desde {"vertices": N, "edges": [{"from", "to", "re", "im"}], "shape": [m, n]}.

        Cada arista implica su inversa conjugada; listar ambas direcciones solo
        se admite si los pesos son conjugados exactos.

        Raises:
            FormatError: estructura inválida
            InvalidWeightError: peso nulo, lazo complejo o inversa inconsistente
            VertexIndexError: índice fuera de rango
        """
        obj = cls._require_object(data, "graph")
        vertices = cls._require_int(obj, "vertices")
        edges_raw = obj.get("edges", [])
        if not isinstance(edges_raw, list):
            raise FormatError("'edges' debe ser una lista", {"field": "edges"})

        graph = WeightedDigraph.empty(vertices)
        for index, item in enumerate(edges_raw):
            edge = cls._require_object(item, f"edges[{index}]")
            i = cls._require_int(edge, "from")
            j = cls._require_int(edge, "to")
            w = complex(cls._require_number(edge, "re"), cls._require_number(edge, "im", default=0.0))
            if graph.has_edge(i, j) and graph.weight(i, j) != w:
                raise InvalidWeightError(
                    f"La arista ({i}, {j}) aparece con pesos no conjugados",
                    {"from": i, "to": j, "index": index},
                )
            graph = graph.add_edge(i, j, w)

        return graph, cls._parse_shape(obj)

    @classmethod
    def parse_density(cls, data: Any) -> DensityMatrix:
        """
        Matriz densidad desde {"order": N, "entries": [[{"re", "im"}, ...], ...]}.

        Raises:
            FormatError: estructura inválida
            DensityMatrixError: la matriz no es una matriz densidad
        """
        obj = cls._require_object(data, "density")
        order = cls._require_int(obj, "order")
        rows = obj.get("entries")
        if not isinstance(rows, list) or len(rows) != order:
            raise FormatError(f"'entries' debe tener {order} filas", {"order": order})

        entries = np.zeros((order, order), dtype=complex)
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != order:
                raise FormatError(f"La fila {r} debe tener {order} entradas", {"row": r})
            for c, cell in enumerate(row):
                if isinstance(cell, (int, float)) and not isinstance(cell, bool):
                    entries[r, c] = float(cell)
                    continue
                cell = cls._require_object(cell, f"entries[{r}][{c}]")
                entries[r, c] = complex(cls._require_number(cell, "re"), cls._require_number(cell, "im", default=0.0))
        return DensityMatrix.from_array(entries)

    # ===== ESCRITURA =====

    @staticmethod
    def graph_to_dict(graph: WeightedDigraph, shape: Optional[Shape] = None) -> Dict[str, Any]:
        """Grafo a dict; cada par conjugado se escribe una vez (from <= to)"""
        data: Dict[str, Any] = {
            "vertices": graph.vertex_count,
            "edges": [
                {"from": i, "to": j, "re": w.real, "im": w.imag} for i, j, w in graph.edge_list()
            ],
        }
        if shape is not None:
            data["shape"] = [int(shape[0]), int(shape[1])]
        return data

    @staticmethod
    def density_to_dict(rho) -> Dict[str, Any]:
        a = np.asarray(rho, dtype=complex)
        return {
            "order": int(a.shape[0]),
            "entries": [[{"re": z.real, "im": z.imag} for z in row] for row in a.tolist()],
        }

    @classmethod
    def dumps(cls, value: Any) -> str:
        """JSON determinista con reales a 17 cifras significativas"""
        return cls._encode(value)

    # ===== MÉTODOS PRIVADOS =====

    @classmethod
    def _encode(cls, value: Any) -> str:
        if value is None:
            return "null"
        if isinstance(value, (bool, np.bool_)):
            return "true" if value else "false"
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            x = float(value)
            if not math.isfinite(x):
                raise FormatError(f"Valor no finito en el reporte: {x}", {"value": str(x)})
            text = format(x, ".17g")
            return "0" if text == "-0" else text
        if isinstance(value, str):
            return json.dumps(value, ensure_ascii=False)
        if isinstance(value, dict):
            items = (f"{json.dumps(str(k), ensure_ascii=False)}: {cls._encode(v)}" for k, v in value.items())
            return "{" + ", ".join(items) + "}"
        if isinstance(value, (list, tuple)):
            return "[" + ", ".join(cls._encode(v) for v in value) + "]"
        raise FormatError(f"Tipo no serializable: {type(value).__name__}", {"type": type(value).__name__})

    @staticmethod
    def _require_object(data: Any, what: str) -> dict:
        if not isinstance(data, dict):
            raise FormatError(f"Se esperaba un objeto JSON en {what}", {"field": what})
        return data

    @staticmethod
    def _require_int(obj: dict, key: str) -> int:
        value = obj.get(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise FormatError(f"'{key}' debe ser un entero", {"field": key})
        return value

    @staticmethod
    def _require_number(obj: dict, key: str, default: Optional[float] = None) -> float:
        value = obj.get(key, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FormatError(f"'{key}' debe ser un número", {"field": key})
        return float(value)

    @classmethod
    def _parse_shape(cls, obj: dict) -> Optional[Shape]:
        shape = obj.get("shape")
        if shape is None:
            return None
        if (not isinstance(shape, list) or len(shape) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in shape)):
            raise FormatError("'shape' debe ser [m, n]", {"field": "shape"})
        return shape[0], shape[1]
