"""DOT export with fixed node positions so drawings match the grid layout."""

from __future__ import annotations

from .boards import EmbeddedGraph
from .graphs import Graph


def graph_to_dot(g: Graph, name: str = "g") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f"  v{v};" for v in range(g.n)]
    lines += [f"  v{u} -- v{v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedded_to_dot(e: EmbeddedGraph, name: str = "g") -> str:
    """Rows grow downward on the grid, so y is negated for graphviz."""
    lines = [f"graph {name} {{", "  node [shape=point, width=0.12];"]
    for v, (r, c) in enumerate(e.coords):
        lines.append(f'  v{v} [pos="{c},{-r}!"];')
    lines += [f"  v{u} -- v{v};" for u, v in e.graph.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
