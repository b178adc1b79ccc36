"""
DOT and JSON export of intersection graphs, plus the JSON import.
"""
import json

from ..errors import GraphFormatError
from ..utils import sign_char
from .intersection_graph import IntersectionGraph

FORMATS = ("dot", "json")


def graph_to_dict(g):
    return {
        "vertices": {str(v): s for v, s in g.vertices.items()},
        "edges": [[u, v] for u, v in g.edges],
    }


def _to_dot(g):
    lines = ["digraph intersection_graph {"]
    for v, s in g.vertices.items():
        lines.append(f'  v{v} [label="{v}{sign_char(s)}", sign="{s:+d}"];')
    for u, v in g.edges:
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines)


def export_graph(g, format="json"):
    """
    Serialize a graph.

    Args:
        g: IntersectionGraph
        format: "dot" (one node line per vertex, one edge line per edge
            occurrence) or "json" (compact, vertices then sorted edges)

    Returns:
        str: Deterministic text
    """
    if format == "dot":
        return _to_dot(g)
    if format == "json":
        return json.dumps(graph_to_dict(g), separators=(",", ":"))
    raise ValueError(f"unknown graph format {format!r}, expected one of {FORMATS}")


def graph_from_json(text):
    """
    Inverse of export_graph(g, "json").

    Raises:
        GraphFormatError: If the document is not a valid graph
    """
    try:
        data = json.loads(text)
        vertices = {int(v): int(s) for v, s in data["vertices"].items()}
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise GraphFormatError(f"bad graph JSON: {exc}") from exc
    return IntersectionGraph(vertices, edges)
