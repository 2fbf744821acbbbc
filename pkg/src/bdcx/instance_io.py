"""Line-oriented instance files.

Grammar (UTF-8, one directive per line, ``#`` starts a comment)::

    v <label>              declare a vertex
    e <label> <label>      declare an edge, declaring its endpoints as needed
    l <label> <int>        set the degree bound of a vertex (default 1)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .graph import Graph


@dataclass
class InstanceFile:
    graph: Graph
    bound: dict
    name: str = ""


def parse_graph_file(text: str, name: str = "") -> InstanceFile:
    order: dict[str, None] = {}
    edges: dict[frozenset, tuple] = {}
    bounds: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind, args = tok[0], tok[1:]
        if kind == "v":
            if len(args) != 1:
                raise ParseError("expected 'v <label>'", lineno)
            order.setdefault(args[0])
        elif kind == "e":
            if len(args) != 2:
                raise ParseError("expected 'e <label> <label>'", lineno)
            a, b = args
            if a == b:
                raise ParseError(f"loop edge at {a!r}", lineno)
            key = frozenset(args)
            if key in edges:
                raise ParseError(f"duplicate edge {a} {b}", lineno)
            order.setdefault(a)
            order.setdefault(b)
            edges[key] = (a, b)
        elif kind == "l":
            if len(args) != 2:
                raise ParseError("expected 'l <label> <nonneg-int>'", lineno)
            label, value = args
            try:
                k = int(value)
            except ValueError:
                raise ParseError(f"bound {value!r} is not an integer", lineno) from None
            if k < 0:
                raise ParseError(f"negative bound {k} at {label!r}", lineno)
            if label in bounds:
                raise ParseError(f"bound for {label!r} redefined", lineno)
            order.setdefault(label)
            bounds[label] = k
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)

    graph = Graph.from_edges(edges.values(), vertices=order)
    bound = {v: bounds.get(v, 1) for v in graph.vertices}
    return InstanceFile(graph, bound, name)


def format_instance(graph: Graph, bound: dict, name: str = "") -> str:
    """Render an instance so that :func:`parse_graph_file` reads it back."""
    lines = [f"# {name}"] if name else []
    lines += [f"v {v}" for v in graph.vertices]
    lines += [f"e {u} {v}" for u, v in graph.edges]
    lines += [f"l {v} {bound[v]}" for v in graph.vertices]
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_graph_file(text, name=path)
