"""Blocks, Tutte decompositions of 2-connected multigraphs, and adhesion completion.

The Tutte decomposition is the triconnected-component (SPQR) decomposition:
split along 2-separations until every piece is a triangle, a bond, or a
3-connected simple graph, then merge adjacent bonds with bonds and polygons
with polygons. The merged components are unique, which makes the result
commute with relabelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from .embedding import NonPlanar, planar_embed
from .graphcore import (
    Edge,
    InvariantViolation,
    Multigraph,
    NotTwoConnected,
    build_graph,
    components,
    is_connected,
    separator,
    sort_key,
)


class PartKind(Enum):
    CYCLE = "CyclePart"
    THREE_CONNECTED = "ThreeConnectedPart"
    BOND = "BondPart"
    EDGE = "EdgePart"


@dataclass(frozen=True)
class VirtualEdge:
    """Placeholder for an adhesion pair inside a torso; ``link`` is the tree edge."""

    link: int

    def __repr__(self) -> str:
        return f"virtual{self.link}"


def is_virtual(edge_id) -> bool:
    return isinstance(edge_id, VirtualEdge)


@dataclass
class TreeDecomposition:
    """A tree of bags over a host graph.

    ``skeletons`` (node -> list of Edge) is present for Tutte decompositions:
    real host edges owned by the node plus one VirtualEdge per incident tree
    edge.
    """

    tree: Multigraph
    bags: dict
    adhesions: dict
    kinds: dict = field(default_factory=dict)
    skeletons: dict = field(default_factory=dict)

    @classmethod
    def from_bags(cls, tree: Multigraph, bags: dict, **kw) -> "TreeDecomposition":
        adh = {e.id: frozenset(bags[e.u]) & frozenset(bags[e.v]) for e in tree.edges}
        return cls(tree, {t: frozenset(b) for t, b in bags.items()}, adh, **kw)

    @property
    def nodes(self) -> tuple:
        return self.tree.vertices

    def nodes_of_kind(self, kind: PartKind) -> list:
        return [t for t in self.nodes if self.kinds.get(t) is kind]

    def adhesion_sets(self) -> list[frozenset]:
        """Distinct adhesion sets in tree-edge order."""
        out = []
        for e in self.tree.edges:
            a = self.adhesions[e.id]
            if a not in out:
                out.append(a)
        return out

    def signature(self, vertex_map: dict | None = None) -> frozenset:
        """Relabelling-independent summary: (kind, bag, real skeleton edges) per node."""
        vm = vertex_map or {}
        return frozenset(
            (
                self.kinds.get(t),
                frozenset(vm.get(v, v) for v in self.bags[t]),
                frozenset(e.id for e in self.skeletons.get(t, ()) if not is_virtual(e.id)),
            )
            for t in self.nodes
        )


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} violated: {self.witness!r}"


# Blocks


@dataclass
class BlockDecomposition:
    blocks: list
    cut_vertices: frozenset
    block_cut_tree: Multigraph


def block_decomposition(g: Multigraph) -> BlockDecomposition:
    """Maximal 2-connected subgraphs, bridges, and loops.

    A cut vertex here is any vertex lying in two or more blocks, so a vertex
    carrying a loop and another edge counts as one.
    """
    disc: dict = {}
    low: dict = {}
    stack_edges: list = []
    groups: list[list] = []
    clock = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        walk = [(root, None, iter(g.incident[root]))]
        while walk:
            v, parent_edge, it = walk[-1]
            advanced = False
            for eid in it:
                e = g.edge[eid]
                if e.is_loop or eid == parent_edge:
                    continue
                w = e.other(v)
                if w not in disc:
                    stack_edges.append(eid)
                    disc[w] = low[w] = clock
                    clock += 1
                    walk.append((w, eid, iter(g.incident[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack_edges.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            walk.pop()
            if walk:
                u = walk[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    group = []
                    while True:
                        eid = stack_edges.pop()
                        group.append(eid)
                        if eid == parent_edge:
                            break
                    groups.append(group)
    groups.extend([e.id] for e in g.edges if e.is_loop)
    groups.sort(key=lambda grp: min(sort_key(i) for i in grp))
    blocks = [g.subgraph(grp) for grp in groups]

    membership: dict = {}
    for k, b in enumerate(blocks):
        for v in b.vertices:
            membership.setdefault(v, []).append(k)
    cuts = frozenset(v for v, ks in membership.items() if len(ks) > 1)
    tree_vertices = [("B", k) for k in range(len(blocks))] + [("C", v) for v in sorted(cuts, key=sort_key)]
    tree_edges = [
        (("B", k, v), ("B", k), ("C", v)) for v in cuts for k in membership[v]
    ]
    return BlockDecomposition(blocks, cuts, build_graph(tree_vertices, tree_edges))


# Tutte decomposition


class _Splitter:
    def __init__(self):
        self.next_link = 0
        self.pieces: list[list[Edge]] = []

    def link(self) -> int:
        k = self.next_link
        self.next_link += 1
        return k

    def split(self, edges: list[Edge]) -> None:
        while True:
            verts = {x for e in edges for x in (e.u, e.v)}
            if len(verts) == 2:
                self.pieces.append(edges)
                return
            classes: dict = {}
            for e in edges:
                classes.setdefault(e.ends, []).append(e)
            if any(len(c) > 1 for c in classes.values()):
                simple = []
                for ends, cls in classes.items():
                    if len(cls) == 1:
                        simple.extend(cls)
                        continue
                    k = self.link()
                    x, y = cls[0].u, cls[0].v
                    self.pieces.append(cls + [Edge(VirtualEdge(k), x, y)])
                    simple.append(Edge(VirtualEdge(k), x, y))
                edges = simple
            if len(verts) == 3:
                self.pieces.append(edges)
                return
            found = _separation_classes(edges, verts)
            if found is None:
                self.pieces.append(edges)
                return
            (a, b), first, rest = found
            k = self.link()
            self.split(first + [Edge(VirtualEdge(k), a, b)])
            edges = rest + [Edge(VirtualEdge(k), a, b)]


def _separation_classes(edges: list[Edge], verts: set):
    """First separation pair (in sorted order) with a split of the edges."""
    order = sorted(verts, key=sort_key)
    for a, b in combinations(order, 2):
        pair = {a, b}
        rest_vertices = [v for v in order if v not in pair]
        inner = Multigraph(rest_vertices, [e for e in edges if e.u not in pair and e.v not in pair])
        comps = components(inner)
        if len(comps) < 2:
            continue
        # a single component plus the edge ab is not a separation
        where = {v: k for k, c in enumerate(comps) for v in c}
        groups: dict = {}
        direct = []
        for e in edges:
            if e.ends <= pair:
                direct.append(e)
                continue
            inside = e.u if e.u not in pair else e.v
            groups.setdefault(where[inside], []).append(e)
        first_key = min(groups)
        first = groups.pop(first_key)
        rest = [e for k in sorted(groups) for e in groups[k]] + direct
        return (a, b), first, rest
    return None


def _kind_of(piece: list[Edge]) -> PartKind:
    verts = {x for e in piece for x in (e.u, e.v)}
    if len(verts) == 2:
        return PartKind.BOND
    if len(verts) == 3 and len(piece) == 3:
        return PartKind.CYCLE
    return PartKind.THREE_CONNECTED


def require_two_connected(b: Multigraph) -> None:
    if any(e.is_loop for e in b.edges):
        raise NotTwoConnected("loops form blocks of their own", witness=None)
    if b.n < 2 or b.m == 0:
        raise NotTwoConnected("a 2-connected graph needs an edge", witness=None)
    if not is_connected(b):
        raise NotTwoConnected("graph is disconnected", witness=())
    if b.n >= 3:
        sep = separator(b, 2)
        if sep is not None:
            raise NotTwoConnected(f"vertex {sep[0]!r} separates the graph", witness=sep)


def tutte_decomposition(b: Multigraph) -> TreeDecomposition:
    """Triconnected-component tree of a 2-connected multigraph."""
    require_two_connected(b)
    if b.n == 2:
        kind = {1: PartKind.EDGE, 2: PartKind.CYCLE}.get(b.m, PartKind.BOND)
        return TreeDecomposition(
            build_graph([0], []), {0: b.vertex_set}, {}, {0: kind}, {0: list(b.edges)}
        )
    sp = _Splitter()
    sp.split(list(b.edges))
    pieces = sp.pieces
    kinds = [_kind_of(p) for p in pieces]

    # merge bond-bond and polygon-polygon neighbours
    holder: dict = {}
    for k, p in enumerate(pieces):
        for e in p:
            if is_virtual(e.id):
                holder.setdefault(e.id.link, []).append(k)
    parent = list(range(len(pieces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged_links = set()
    for link, (p, q) in sorted(holder.items()):
        if kinds[p] is kinds[q] and kinds[p] in (PartKind.BOND, PartKind.CYCLE):
            parent[find(p)] = find(q)
            merged_links.add(link)
    groups: dict = {}
    for k in range(len(pieces)):
        groups.setdefault(find(k), []).append(k)

    node_of = {}
    skeletons, kinds_out, bags = {}, {}, {}
    for t, (root, members) in enumerate(sorted(groups.items())):
        edges = [
            e for k in members for e in pieces[k]
            if not (is_virtual(e.id) and e.id.link in merged_links)
        ]
        for k in members:
            node_of[k] = t
        skeletons[t] = sorted(edges, key=lambda e: (is_virtual(e.id), sort_key(e.id) if not is_virtual(e.id) else e.id.link))
        kinds_out[t] = kinds[root]
        bags[t] = frozenset(x for e in edges for x in (e.u, e.v))
    tree_edges = []
    for link, (p, q) in sorted(holder.items()):
        if link in merged_links:
            continue
        tree_edges.append((link, node_of[p], node_of[q]))
    tree = build_graph(range(len(skeletons)), tree_edges)
    return TreeDecomposition.from_bags(tree, bags, kinds=kinds_out, skeletons=skeletons)


def torso(g: Multigraph, td: TreeDecomposition, t) -> Multigraph:
    """Graph on bag(t) with its completed adhesion sets.

    For a Tutte decomposition this is the node's skeleton: the real edges it
    owns plus one virtual edge per incident tree edge. Otherwise every host
    edge inside the bag is kept and one virtual edge is added per adhesion
    set contained in the bag.
    """
    if t in td.skeletons:
        return Multigraph(td.bags[t], td.skeletons[t])
    bag = td.bags[t]
    edges = [e for e in g.edges if e.u in bag and e.v in bag]
    for e in td.tree.edges:
        a = td.adhesions[e.id]
        if len(a) == 2 and a <= bag:
            x, y = sorted(a, key=sort_key)
            edges.append(Edge(VirtualEdge(e.id), x, y))
    return Multigraph(bag, edges)


def _tree_path(tree: Multigraph, s, t) -> list:
    prev = {s: None}
    queue = [s]
    for x in queue:
        for eid in tree.incident[x]:
            y = tree.edge[eid].other(x)
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [t]
    while path[-1] != s:
        path.append(prev[path[-1]])
    return path[::-1]


def check_td_axioms(g: Multigraph, td: TreeDecomposition, max_adhesion: int | None = 2) -> Violation | None:
    """First failed tree-decomposition axiom, or None if all hold."""
    tree = td.tree
    if tree.n == 0 or tree.m != tree.n - 1 or not is_connected(tree) or any(e.is_loop for e in tree.edges):
        return Violation("tree", (tree.n, tree.m))
    covered = set().union(*td.bags.values()) if td.bags else set()
    for v in g.vertices:
        if v not in covered:
            return Violation("T1", (v,))
    for e in g.edges:
        if not any(e.u in bag and e.v in bag for bag in td.bags.values()):
            return Violation("T2", (e.id,))
    nodes = tree.vertices
    for t1, t3 in combinations(nodes, 2):
        common = td.bags[t1] & td.bags[t3]
        if not common:
            continue
        for t2 in _tree_path(tree, t1, t3)[1:-1]:
            missing = common - td.bags[t2]
            if missing:
                return Violation("T3", (t1, t2, t3, min(missing, key=sort_key)))
    for e in tree.edges:
        actual = td.bags[e.u] & td.bags[e.v]
        if td.adhesions.get(e.id) != actual:
            return Violation("adhesion", (e.id, actual))
        if max_adhesion is not None and len(actual) > max_adhesion:
            return Violation("adhesion size", (e.id, len(actual)))
    return None


def added_edge_id(x, y, taken: Iterable = ()) -> str:
    a, b = sorted((x, y), key=sort_key)
    name = f"+{a}~{b}"
    taken = set(taken)
    while name in taken:
        name += "'"
    return name


def complete_adhesions(
    g: Multigraph, td: TreeDecomposition, reserved: Iterable = (), check_planar: bool = True
) -> tuple[Multigraph, list[Edge]]:
    """Add one edge per adhesion pair that is not already adjacent."""
    taken = set(g.edge) | set(reserved)
    added = []
    for a in td.adhesion_sets():
        if len(a) != 2:
            continue
        x, y = sorted(a, key=sort_key)
        if g.multiplicity(x, y):
            continue
        eid = added_edge_id(x, y, taken)
        taken.add(eid)
        added.append(Edge(eid, x, y))
    g_prime = g.with_edges(added) if added else g
    if check_planar and added:
        try:
            planar_embed(g_prime)
        except NonPlanar:
            raise InvariantViolation("completing the adhesion sets destroyed planarity") from None
    return g_prime, added


__all__ = [
    "BlockDecomposition",
    "PartKind",
    "TreeDecomposition",
    "Violation",
    "VirtualEdge",
    "added_edge_id",
    "block_decomposition",
    "check_td_axioms",
    "complete_adhesions",
    "is_virtual",
    "require_two_connected",
    "torso",
    "tutte_decomposition",
]
