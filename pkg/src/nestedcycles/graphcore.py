"""Finite multigraphs and GF(2) edge-set algebra.

Edges carry their own identifiers, so parallel edges and loops are first-class.
Edge sets are stored as frozensets of identifiers and, for the linear algebra,
as integer bitmasks indexed by the host graph's sorted edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

Vertex = Hashable
EdgeId = Hashable


class GraphError(ValueError):
    """Malformed graph input or an operation outside its precondition."""


class NotTwoConnected(GraphError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotThreeConnected(GraphError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(RuntimeError):
    """A property the construction guarantees failed to hold."""


def sort_key(token) -> tuple:
    """Total order over opaque identifiers of mixed type (ints before strings)."""
    if isinstance(token, bool):
        return (2, repr(token))
    if isinstance(token, int):
        return (0, token, "")
    if isinstance(token, str):
        return (1, 0, token)
    return (2, repr(token))


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    u: Vertex
    v: Vertex

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: Vertex) -> Vertex:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x!r} is not an end of edge {self.id!r}")

    @property
    def ends(self) -> frozenset:
        return frozenset((self.u, self.v))


class Multigraph:
    """Immutable finite multigraph.

    Vertices and edges are kept in a canonical sorted order so that every
    derived structure (bit positions, traversal orders) is reproducible.
    """

    __slots__ = ("vertices", "edges", "__dict__")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Edge]):
        vs = sorted(set(vertices), key=sort_key)
        es = sorted(edges, key=lambda e: sort_key(e.id))
        self.vertices: tuple = tuple(vs)
        self.edges: tuple[Edge, ...] = tuple(es)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def bit(self) -> dict:
        """Edge identifier -> bit position in edge-set masks."""
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def incident(self) -> dict:
        """Vertex -> tuple of incident edge ids (a loop is listed once)."""
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e.id)
            if not e.is_loop:
                inc[e.v].append(e.id)
        return {v: tuple(ids) for v, ids in inc.items()}

    def degree(self, v: Vertex) -> int:
        return sum(2 if self.edge[i].is_loop else 1 for i in self.incident[v])

    def neighbours(self, v: Vertex) -> set:
        return {self.edge[i].other(v) for i in self.incident[v]} - {v}

    def multiplicity(self, x: Vertex, y: Vertex) -> int:
        return sum(1 for i in self.incident[x] if self.edge[i].ends == frozenset((x, y)))

    def edges_between(self, x: Vertex, y: Vertex) -> list:
        return [i for i in self.incident[x] if self.edge[i].ends == frozenset((x, y))]

    @cached_property
    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.is_loop or e.ends in seen:
                return False
            seen.add(e.ends)
        return True

    def edge_set(self, ids: Iterable[EdgeId] = ()) -> "EdgeSet":
        return EdgeSet(self, ids)

    def from_mask(self, mask: int) -> "EdgeSet":
        return EdgeSet(self, (e.id for i, e in enumerate(self.edges) if mask >> i & 1))

    def subgraph(self, edge_ids: Iterable[EdgeId], vertices: Iterable[Vertex] = ()) -> "Multigraph":
        """Subgraph on the given edges, their ends, and any extra vertices."""
        es = [self.edge[i] for i in edge_ids]
        vs = set(vertices)
        for e in es:
            vs.update((e.u, e.v))
        return Multigraph(vs, es)

    def induced(self, vertices: Iterable[Vertex]) -> "Multigraph":
        vs = set(vertices)
        return Multigraph(vs, [e for e in self.edges if e.u in vs and e.v in vs])

    def without_vertices(self, removed: Iterable[Vertex]) -> "Multigraph":
        gone = set(removed)
        return self.induced(v for v in self.vertices if v not in gone)

    def with_edges(self, extra: Iterable[Edge]) -> "Multigraph":
        return build_graph(self.vertices, list(self.edges) + list(extra))

    def relabel(self, vertex_map: dict, edge_map: dict | None = None) -> "Multigraph":
        edge_map = edge_map or {}
        return Multigraph(
            (vertex_map[v] for v in self.vertices),
            (Edge(edge_map.get(e.id, e.id), vertex_map[e.u], vertex_map[e.v]) for e in self.edges),
        )


def build_graph(vertex_list: Iterable[Vertex], edge_list: Iterable) -> Multigraph:
    """Build a multigraph from vertices and ``(id, u, v)`` records (or Edges).

    Raises GraphError on a duplicate edge id or an endpoint that is not a
    listed vertex.
    """
    vertices = list(vertex_list)
    vset = set(vertices)
    edges = []
    seen = set()
    for rec in edge_list:
        e = rec if isinstance(rec, Edge) else Edge(*rec)
        if e.id in seen:
            raise GraphError(f"duplicate edge identifier {e.id!r}")
        for x in (e.u, e.v):
            if x not in vset:
                raise GraphError(f"dangling endpoint {x!r} on edge {e.id!r}")
        seen.add(e.id)
        edges.append(e)
    return Multigraph(vertices, edges)


class EdgeSet:
    """An element of the edge space of a fixed host graph over GF(2)."""

    __slots__ = ("host", "ids")

    def __init__(self, host: Multigraph, ids: Iterable[EdgeId] = ()):
        ids = frozenset(ids)
        missing = [i for i in ids if i not in host.edge]
        if missing:
            raise GraphError(f"edge {missing[0]!r} is not in the host graph")
        self.host = host
        self.ids = ids

    def _check(self, other: "EdgeSet") -> None:
        if not isinstance(other, EdgeSet):
            raise TypeError("EdgeSet arithmetic needs another EdgeSet")
        if other.host is not self.host and other.host != self.host:
            raise GraphError("edge sets live in different host graphs")

    def __add__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.host, self.ids ^ other.ids)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.ids == other.ids and (self.host is other.host or self.host == other.host)

    def __hash__(self) -> int:
        return hash(self.ids)

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.ids, key=sort_key))

    def __contains__(self, item) -> bool:
        return item in self.ids

    def __bool__(self) -> bool:
        return bool(self.ids)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"

    @property
    def mask(self) -> int:
        bit = self.host.bit
        out = 0
        for i in self.ids:
            out |= 1 << bit[i]
        return out

    @property
    def vertices(self) -> frozenset:
        out = set()
        for i in self.ids:
            e = self.host.edge[i]
            out.update((e.u, e.v))
        return frozenset(out)


def edgeset_sum(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    return a + b


def sum_all(host: Multigraph, sets: Iterable[EdgeSet]) -> EdgeSet:
    out = frozenset()
    for s in sets:
        out = out ^ s.ids
    return EdgeSet(host, out)


def _degrees(g: Multigraph, ids: Iterable[EdgeId]) -> dict:
    deg: dict = {}
    for i in ids:
        e = g.edge[i]
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
    return deg


def is_circuit(g: Multigraph, f: EdgeSet) -> bool:
    """Nonempty, connected, and 2-regular on the vertices it touches."""
    if f.host is not g and f.host != g:
        raise GraphError("edge set belongs to another graph")
    if not f:
        return False
    deg = _degrees(g, f.ids)
    if any(d != 2 for d in deg.values()):
        return False
    return len(components(g.subgraph(f.ids))) == 1


def components(g: Multigraph) -> list[frozenset]:
    """Connected components as vertex sets, in order of their least vertex."""
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    groups: dict = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return [frozenset(vs) for vs in groups.values()]


def component_map(g: Multigraph) -> dict:
    """Vertex -> index of its component in ``components(g)``."""
    return {v: k for k, comp in enumerate(components(g)) for v in comp}


def cycle_space_dimension(g: Multigraph) -> int:
    return g.m - g.n + len(components(g))


def is_connected(g: Multigraph) -> bool:
    return len(components(g)) <= 1


def separator(g: Multigraph, k: int) -> tuple | None:
    """A vertex set of size < k whose deletion disconnects g, if one exists.

    Brute force over all small vertex subsets. Graphs with at most k vertices
    are reported as lacking connectivity via the full-but-one vertex set, the
    usual convention that K_n is (n-1)-connected.
    """
    if g.n <= k:
        return tuple(g.vertices[: max(g.n - 1, 0)])
    for size in range(k):
        for sep in combinations(g.vertices, size):
            if not is_connected(g.without_vertices(sep)):
                return sep
    return None


def is_k_connected(g: Multigraph, k: int) -> bool:
    return separator(g, k) is None


@dataclass(frozen=True)
class Cycle:
    """A circuit together with a cyclic vertex order traversing it."""

    edges: EdgeSet
    vertex_order: tuple

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.vertex_order)

    @classmethod
    def from_edges(cls, g: Multigraph, f: EdgeSet | Iterable[EdgeId]) -> "Cycle":
        if not isinstance(f, EdgeSet):
            f = EdgeSet(g, f)
        if not is_circuit(g, f):
            raise GraphError(f"{f!r} is not a circuit")
        ids = sorted(f.ids, key=sort_key)
        first = g.edge[ids[0]]
        if first.is_loop:
            return cls(f, (first.u,))
        order = [first.u]
        used = {first.id}
        cur = first.v
        while cur != first.u:
            order.append(cur)
            nxt = next(i for i in g.incident[cur] if i in f.ids and i not in used)
            used.add(nxt)
            cur = g.edge[nxt].other(cur)
        return cls(f, tuple(order))


@dataclass(frozen=True)
class Cut:
    side_x: frozenset
    side_y: frozenset
    edges: EdgeSet

    @classmethod
    def from_side(cls, g: Multigraph, side: Iterable[Vertex]) -> "Cut":
        x = frozenset(side)
        if not x <= g.vertex_set:
            raise GraphError("cut side contains vertices outside the graph")
        y = g.vertex_set - x
        crossing = [e.id for e in g.edges if (e.u in x) != (e.v in x)]
        return cls(x, y, EdgeSet(g, crossing))


# GF(2) elimination on integer bitmasks.

class GF2Basis:
    """Incremental row-echelon basis with provenance for certificates.

    Each stored pivot row remembers which input vectors (as a bitmask over
    input positions) it is the sum of.
    """

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}  # pivot bit -> (row, combo)
        self.count = 0

    def reduce(self, vec: int) -> tuple[int, int]:
        combo = 0
        while vec:
            top = vec.bit_length() - 1
            if top not in self.rows:
                break
            row, c = self.rows[top]
            vec ^= row
            combo ^= c
        return vec, combo

    def add(self, vec: int) -> bool:
        """Insert the next input vector; True iff it increased the rank."""
        idx = self.count
        self.count += 1
        rest, combo = self.reduce(vec)
        if not rest:
            return False
        self.rows[rest.bit_length() - 1] = (rest, combo ^ (1 << idx))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self, target: int) -> int | None:
        """Bitmask over input positions summing to target, or None."""
        rest, combo = self.reduce(target)
        if rest:
            return None
        return combo


def gf2_rank_masks(masks: Sequence[int]) -> int:
    basis = GF2Basis()
    for m in masks:
        basis.add(m)
    return basis.rank
