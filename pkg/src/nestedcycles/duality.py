"""Geometric duals, tight cuts, and the circuit/tight-cut correspondence."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .embedding import RotationSystem
from .graphcore import (
    Cut,
    EdgeSet,
    GraphError,
    Multigraph,
    build_graph,
    components,
    is_circuit,
    is_connected,
)


class BudgetExceeded(RuntimeError):
    pass


def dual_edge_id(e) -> str:
    return f"{e}*"


@dataclass(frozen=True)
class DualPair:
    primal: Multigraph
    primal_rotation: RotationSystem
    dual: Multigraph
    edge_map: dict  # primal edge id -> dual edge id

    @property
    def inverse_map(self) -> dict:
        return {v: k for k, v in self.edge_map.items()}


def build_dual(g: Multigraph, rot: RotationSystem) -> DualPair:
    """Faces become vertices; each primal edge joins the faces on its two sides."""
    if not is_connected(g):
        raise GraphError("the geometric dual needs a connected primal graph")
    if rot.graph != g:
        raise GraphError("rotation system belongs to another graph")
    fod = rot.face_of_dart
    edges = []
    emap = {}
    for e in g.edges:
        star = dual_edge_id(e.id)
        emap[e.id] = star
        edges.append((star, fod[(e.id, 0)], fod[(e.id, 1)]))
    n_faces = max(len(rot.faces), 1)  # K1 has one face and no darts
    dual = build_graph(range(n_faces), edges)
    return DualPair(g, rot, dual, emap)


def image_of(dp: DualPair, f: EdgeSet, direction: str = "forward") -> EdgeSet:
    if direction == "forward":
        src, dst, table = dp.primal, dp.dual, dp.edge_map
    elif direction == "backward":
        src, dst, table = dp.dual, dp.primal, dp.inverse_map
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if f.host is not src and f.host != src:
        raise GraphError(f"edge set is not over the {direction} source graph")
    return EdgeSet(dst, (table[i] for i in f.ids))


def tight_cut_sides(g: Multigraph, b: EdgeSet) -> Cut | None:
    """The bipartition making b a tight cut, or None if b is not one."""
    if b.host is not g and b.host != g:
        raise GraphError("edge set belongs to another graph")
    rest = Multigraph(g.vertices, [e for e in g.edges if e.id not in b.ids])
    comps = components(rest)
    if len(comps) != 2:
        return None
    x = comps[0]
    for i in b.ids:
        e = g.edge[i]
        if (e.u in x) == (e.v in x):
            return None
    return Cut(x, comps[1], b)


def is_tight_cut(g: Multigraph, b: EdgeSet) -> bool:
    return tight_cut_sides(g, b) is not None


def circuit_iff_tight_cut(dp: DualPair, f: EdgeSet) -> bool:
    left = is_circuit(dp.primal, f)
    image = image_of(dp, f)
    right = bool(image) and is_tight_cut(dp.dual, image)
    return left == right


@dataclass
class DualityReport:
    strategy: str
    circuits: int = 0
    tight_cuts: int = 0
    subsets_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class _MaskGraph:
    """Bitmask view of a multigraph for fast exhaustive checks."""

    def __init__(self, g: Multigraph):
        idx = {v: k for k, v in enumerate(g.vertices)}
        self.n = g.n
        self.ends = [(idx[e.u], idx[e.v]) for e in g.edges]

    def _comps(self, mask: int, keep: bool) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, (u, v) in enumerate(self.ends):
            if bool(mask >> k & 1) == keep:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        return [find(x) for x in range(self.n)]

    def is_circuit(self, mask: int) -> bool:
        if not mask:
            return False
        deg = [0] * self.n
        touched = set()
        for k, (u, v) in enumerate(self.ends):
            if mask >> k & 1:
                deg[u] += 1
                deg[v] += 1
                touched.update((u, v))
        if any(deg[x] != 2 for x in touched):
            return False
        root = self._comps(mask, True)
        return len({root[x] for x in touched}) == 1

    def is_tight_cut(self, mask: int) -> bool:
        root = self._comps(mask, False)
        if len(set(root)) != 2:
            return False
        for k, (u, v) in enumerate(self.ends):
            if mask >> k & 1 and root[u] == root[v]:
                return False
        return True


def verify_duality_exhaustive(dp: DualPair, budget: int = 16, strategy: str = "subsets") -> DualityReport:
    """Check the circuit/tight-cut correspondence on every edge subset.

    ``strategy="subsets"`` walks all 2^m subsets of primal edges;
    ``strategy="enumerate"`` lists circuits of the primal and tight cuts of
    the dual (by vertex bipartition) and compares the two families.
    Refuses when the primal has more than ``budget`` edges.
    """
    g = dp.primal
    if g.m > budget:
        raise BudgetExceeded(f"{g.m} edges exceed the exhaustive budget of {budget}")
    # primal bit k corresponds to dual bit perm[k]
    perm = [dp.dual.bit[dp.edge_map[e.id]] for e in g.edges]

    def to_dual(mask: int) -> int:
        out = 0
        for k, j in enumerate(perm):
            if mask >> k & 1:
                out |= 1 << j
        return out

    primal, dual = _MaskGraph(g), _MaskGraph(dp.dual)
    report = DualityReport(strategy)
    if strategy == "subsets":
        for mask in range(1 << g.m):
            left = primal.is_circuit(mask)
            right = mask != 0 and dual.is_tight_cut(to_dual(mask))
            report.circuits += left
            report.tight_cuts += right
            report.subsets_checked += 1
            if left != right:
                report.violations.append(g.from_mask(mask))
        return report
    if strategy == "enumerate":
        from .oracle import enumerate_circuits

        circuits = {c.mask for c in enumerate_circuits(g)}
        inv = {j: k for k, j in enumerate(perm)}
        cuts = set()
        dv = dp.dual.vertices
        for size in range(1, len(dv)):
            for side in combinations(dv, size):
                if dv[0] not in side:
                    continue
                cut = Cut.from_side(dp.dual, side)
                if cut.edges and is_tight_cut(dp.dual, cut.edges):
                    dm = cut.edges.mask
                    cuts.add(sum(1 << inv[j] for j in range(dp.dual.m) if dm >> j & 1))
        report.circuits = len(circuits)
        report.tight_cuts = len(cuts)
        report.violations = [g.from_mask(m) for m in sorted(circuits ^ cuts)]
        return report
    raise ValueError(f"unknown strategy {strategy!r}")


def vertex_stars(g: Multigraph) -> dict:
    """Vertex -> set of non-loop incident edge ids (its trivial cut)."""
    return {v: EdgeSet(g, (i for i in g.incident[v] if not g.edge[i].is_loop)) for v in g.vertices}


__all__ = [
    "BudgetExceeded",
    "DualPair",
    "DualityReport",
    "build_dual",
    "circuit_iff_tight_cut",
    "image_of",
    "is_tight_cut",
    "tight_cut_sides",
    "verify_duality_exhaustive",
    "vertex_stars",
]
