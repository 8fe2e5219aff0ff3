"""Graph documents: a line-oriented text format, its JSON mirror, and DOT export.

Text format, one record per line, ``#`` starts a comment::

    graph k4
    v 4              # vertices 1..4   (or: vl a b c ...)
    e 1 1 2          # edge id, endpoints
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphcore import GraphError, Multigraph, build_graph


class GraphSyntaxError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _token(text: str):
    try:
        return int(text)
    except ValueError:
        return text


@dataclass
class GraphDocument:
    name: str
    graph: Multigraph


def parse_document(text: str) -> GraphDocument:
    name = "graph"
    vertices: list | None = None
    edges = []
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        if head == "graph":
            if len(args) != 1:
                raise GraphSyntaxError("expected 'graph <name>'", lineno)
            name = args[0]
        elif head == "v":
            if len(args) != 1 or not args[0].isdigit():
                raise GraphSyntaxError("expected 'v <count>'", lineno)
            vertices = list(range(1, int(args[0]) + 1))
        elif head == "vl":
            vertices = [_token(a) for a in args]
        elif head == "e":
            if len(args) != 3:
                raise GraphSyntaxError("expected 'e <id> <u> <v>'", lineno)
            rec = tuple(_token(a) for a in args)
            edges.append(rec)
            where[rec] = lineno
        else:
            raise GraphSyntaxError(f"unknown record {head!r}", lineno)
    if vertices is None:
        raise GraphSyntaxError("missing vertex declaration ('v' or 'vl')")
    vset = set(vertices)
    seen = set()
    for rec in edges:
        for x in rec[1:]:
            if x not in vset:
                raise GraphSyntaxError(f"dangling endpoint {x!r}", where[rec])
        if rec[0] in seen:
            raise GraphSyntaxError(f"duplicate edge identifier {rec[0]!r}", where[rec])
        seen.add(rec[0])
    return GraphDocument(name, build_graph(vertices, edges))


def parse_graph(text: str) -> Multigraph:
    return parse_document(text).graph


def serialize_graph(g: Multigraph, name: str = "graph") -> str:
    lines = [f"graph {name}"]
    if list(g.vertices) == list(range(1, g.n + 1)):
        lines.append(f"v {g.n}")
    else:
        lines.append("vl " + " ".join(str(v) for v in g.vertices))
    lines += [f"e {e.id} {e.u} {e.v}" for e in g.edges]
    return "\n".join(lines) + "\n"


def _plain(token):
    return token if isinstance(token, (int, str)) else str(token)


def graph_to_json(g: Multigraph, name: str = "graph") -> dict:
    return {
        "name": name,
        "vertices": [_plain(v) for v in g.vertices],
        "edges": [[_plain(e.id), _plain(e.u), _plain(e.v)] for e in g.edges],
    }


def graph_from_json(data: dict | str) -> GraphDocument:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        vertices = data["vertices"]
        if isinstance(vertices, int):
            vertices = list(range(1, vertices + 1))
        g = build_graph(vertices, [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphSyntaxError(f"malformed graph document: {exc}") from None
    return GraphDocument(data.get("name", "graph"), g)


def load_document(text: str) -> GraphDocument:
    """Accept either the text format or its JSON mirror."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_document(text)


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"]


def generators_to_dot(host: Multigraph, cycles, name: str = "graph", added=()) -> str:
    """DOT rendering: one colour per generator, added edges dashed."""
    colour: dict = {}
    for k, c in enumerate(cycles):
        for eid in c.edges.ids:
            colour.setdefault(eid, []).append(_PALETTE[k % len(_PALETTE)])
    added = set(added)
    out = [f'graph "{name}" {{']
    for v in host.vertices:
        out.append(f'  "{v}";')
    for e in host.edges:
        attrs = [f'label="{e.id}"']
        if e.id in colour:
            attrs.append('color="' + ":".join(colour[e.id]) + '"')
        if e.id in added:
            attrs.append("style=dashed")
        out.append(f'  "{e.u}" -- "{e.v}" [{", ".join(attrs)}];')
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "GraphDocument",
    "GraphSyntaxError",
    "generators_to_dot",
    "graph_from_json",
    "graph_to_json",
    "load_document",
    "parse_document",
    "parse_graph",
    "serialize_graph",
]
