"""Combinatorial plane embeddings: rotation systems, faces, and cycle sides.

A dart is ``(edge_id, end)`` with ``end`` 0 sitting at ``edge.u`` and 1 at
``edge.v``; a loop has both darts at its single vertex. The face permutation
is ``dart -> rotation successor of its reversal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import permutations, product
from math import factorial
from typing import Iterable

import networkx as nx

from .graphcore import (
    Cycle,
    EdgeSet,
    GraphError,
    InvariantViolation,
    Multigraph,
    NotTwoConnected,
    component_map,
    components,
    sort_key,
)

Dart = tuple


class NonPlanar(GraphError):
    pass


class Side(Enum):
    ON_CYCLE = "OnCycle"
    SIDE_A = "SideA"
    SIDE_B = "SideB"


def reverse(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


def dart_vertex(g: Multigraph, d: Dart):
    e = g.edge[d[0]]
    return e.v if d[1] else e.u


@dataclass(frozen=True)
class Face:
    darts: tuple
    boundary: EdgeSet

    def __len__(self) -> int:
        return len(self.darts)

    def vertex_walk(self, g: Multigraph) -> tuple:
        return tuple(dart_vertex(g, d) for d in self.darts)


class RotationSystem:
    """Per-vertex cyclic order of darts for a fixed multigraph."""

    def __init__(self, graph: Multigraph, order: dict):
        self.graph = graph
        self.order = {v: tuple(order.get(v, ())) for v in graph.vertices}
        seen = [d for ds in self.order.values() for d in ds]
        expected = {(e.id, k) for e in graph.edges for k in (0, 1)}
        if len(seen) != len(expected) or set(seen) != expected:
            raise GraphError("rotation system must list every dart exactly once")
        for v, ds in self.order.items():
            for d in ds:
                if dart_vertex(graph, d) != v:
                    raise GraphError(f"dart {d!r} listed at the wrong vertex {v!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, RotationSystem) and self.graph == other.graph and self.order == other.order

    def __hash__(self) -> int:
        return hash(tuple(self.order.items()))

    @cached_property
    def succ(self) -> dict:
        out = {}
        for ds in self.order.values():
            for k, d in enumerate(ds):
                out[d] = ds[(k + 1) % len(ds)]
        return out

    def face_next(self, d: Dart) -> Dart:
        return self.succ[reverse(d)]

    @cached_property
    def faces(self) -> tuple:
        return tuple(trace_faces(self.graph, self))

    @cached_property
    def face_of_dart(self) -> dict:
        return {d: k for k, f in enumerate(self.faces) for d in f.darts}

    def mirror(self) -> "RotationSystem":
        return RotationSystem(self.graph, {v: tuple(reversed(ds)) for v, ds in self.order.items()})

    def is_planar(self) -> bool:
        """Genus-0 certificate, checked per connected component."""
        g = self.graph
        comp = component_map(g)
        counts = {}
        for v in g.vertices:
            counts.setdefault(comp[v], [0, 0, 0])[0] += 1
        for e in g.edges:
            counts[comp[e.u]][1] += 1
        for f in self.faces:
            counts[comp[dart_vertex(g, f.darts[0])]][2] += 1
        for n, m, f in counts.values():
            if m == 0:
                continue  # isolated vertex: one face, no darts
            if n - m + f != 2:
                return False
        return True


def trace_faces(g: Multigraph, rot: RotationSystem) -> list[Face]:
    """All face orbits, each started at its least unvisited dart."""
    darts = sorted(((e.id, k) for e in g.edges for k in (0, 1)), key=lambda d: (sort_key(d[0]), d[1]))
    seen = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        orbit = []
        d = start
        while d not in seen:
            seen.add(d)
            orbit.append(d)
            d = rot.face_next(d)
        faces.append(Face(tuple(orbit), EdgeSet(g, {x[0] for x in orbit})))
    return faces


def _subdivided(g: Multigraph) -> tuple[nx.Graph, dict]:
    """Simple graph for the planarity test plus a map (u, nbr) -> dart at u.

    Loops are subdivided twice and every edge of a parallel class once.
    """
    multi = {}
    for e in g.edges:
        multi[e.ends] = multi.get(e.ends, 0) + 1
    h = nx.Graph()
    h.add_nodes_from(("v", v) for v in g.vertices)
    to_dart = {}
    for e in g.edges:
        u, v = ("v", e.u), ("v", e.v)
        if e.is_loop:
            s1, s2 = ("s", e.id, 0), ("s", e.id, 1)
            h.add_edges_from([(u, s1), (s1, s2), (s2, u)])
            to_dart[(u, s1)] = (e.id, 0)
            to_dart[(u, s2)] = (e.id, 1)
        elif multi[e.ends] > 1:
            s = ("s", e.id, 0)
            h.add_edges_from([(u, s), (s, v)])
            to_dart[(u, s)] = (e.id, 0)
            to_dart[(v, s)] = (e.id, 1)
        else:
            h.add_edge(u, v)
            to_dart[(u, v)] = (e.id, 0)
            to_dart[(v, u)] = (e.id, 1)
    return h, to_dart


def planar_embed(g: Multigraph) -> RotationSystem:
    """A planar rotation system for g, or NonPlanar.

    Components are embedded independently. The result depends only on the
    graph's (sorted) encoding.
    """
    h, to_dart = _subdivided(g)
    ok, emb = nx.check_planarity(h)
    if not ok:
        raise NonPlanar("graph admits no genus-0 rotation system")
    order = {}
    for v in g.vertices:
        node = ("v", v)
        if h.degree(node) == 0:
            order[v] = ()
            continue
        ds = [to_dart[(node, w)] for w in emb.neighbors_cw_order(node)]
        # canonical start: least dart first
        k = min(range(len(ds)), key=lambda i: (sort_key(ds[i][0]), ds[i][1]))
        order[v] = tuple(ds[k:] + ds[:k])
    rot = RotationSystem(g, order)
    if not rot.is_planar():
        raise InvariantViolation("embedding failed the genus-0 certificate")
    return rot


def face_boundary_cycles(g: Multigraph, rot: RotationSystem) -> list[Cycle]:
    out = []
    for f in rot.faces:
        walk = f.vertex_walk(g)
        edges = [d[0] for d in f.darts]
        if len(set(walk)) != len(walk) or len(set(edges)) != len(edges):
            raise NotTwoConnected(f"face boundary {walk!r} repeats a vertex or edge")
        out.append(Cycle(f.boundary, walk))
    return out


def facial_invariance_check(g: Multigraph, rot: RotationSystem, autos: Iterable) -> bool:
    """Every automorphism maps the set of face boundaries onto itself.

    ``autos`` yields objects with an ``edge_map`` dict (or plain dicts).
    """
    facial = {f.boundary.ids for f in rot.faces}
    for a in autos:
        emap = a if isinstance(a, dict) else a.edge_map
        for ids in facial:
            if frozenset(emap[i] for i in ids) not in facial:
                return False
    return True


class CycleSides:
    """Side labels of every vertex relative to one cycle of an embedded graph.

    The dual edges of the cycle form a tight cut of the geometric dual of the
    cycle's component; its two shores give the two sides.
    """

    def __init__(self, g: Multigraph, rot: RotationSystem, c: Cycle):
        self.cycle = c
        comp = component_map(g)
        home = comp[next(iter(c.vertices))]
        self.component = frozenset(v for v in g.vertices if comp[v] == home)
        faces = [k for k, f in enumerate(rot.faces) if comp[dart_vertex(g, f.darts[0])] == home]
        parent = {k: k for k in faces}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        fod = rot.face_of_dart
        for e in g.edges:
            if comp[e.u] != home or e.id in c.edges.ids:
                continue
            a, b = find(fod[(e.id, 0)]), find(fod[(e.id, 1)])
            if a != b:
                parent[a] = b
        roots = sorted({find(k) for k in faces})
        if len(roots) != 2:
            raise InvariantViolation(
                f"dual minus the cycle's dual edges has {len(roots)} components, expected 2"
            )
        # SideA holds the least-indexed face
        first = find(faces[0])
        self.face_side = {k: Side.SIDE_A if find(k) == first else Side.SIDE_B for k in faces}
        self.labels = {}
        for v in self.component:
            if v in c.vertices:
                self.labels[v] = Side.ON_CYCLE
            else:
                d = rot.order[v][0]
                self.labels[v] = self.face_side[fod[d]]

    def __getitem__(self, v) -> Side:
        try:
            return self.labels[v]
        except KeyError:
            raise GraphError(f"vertex {v!r} is not in the cycle's component") from None

    def witnesses(self, vertices: Iterable) -> set:
        """Sides (A/B) occupied by the given vertices of the same component."""
        return {self.labels[v] for v in vertices if v in self.labels} - {Side.ON_CYCLE}


def vertex_side(g: Multigraph, rot: RotationSystem, c: Cycle, v) -> Side:
    return CycleSides(g, rot, c)[v]


def all_rotation_systems(g: Multigraph):
    """Every rotation system of g (first dart at each vertex held fixed)."""
    per_vertex = []
    for v in g.vertices:
        ds = sorted(
            [(i, 0) for i in g.incident[v] if g.edge[i].u == v]
            + [(i, 1) for i in g.incident[v] if g.edge[i].v == v],
            key=lambda d: (sort_key(d[0]), d[1]),
        )
        if len(ds) <= 2:
            per_vertex.append([tuple(ds)])
        else:
            per_vertex.append([(ds[0],) + p for p in permutations(ds[1:])])
    for choice in product(*per_vertex):
        yield RotationSystem(g, dict(zip(g.vertices, choice)))


def count_rotation_systems(g: Multigraph) -> int:
    total = 1
    for v in g.vertices:
        total *= factorial(max(g.degree(v) - 1, 0))
    return total


__all__ = [
    "CycleSides",
    "Face",
    "NonPlanar",
    "NotTwoConnected",
    "RotationSystem",
    "Side",
    "all_rotation_systems",
    "components",
    "count_rotation_systems",
    "face_boundary_cycles",
    "facial_invariance_check",
    "planar_embed",
    "reverse",
    "trace_faces",
    "vertex_side",
]
