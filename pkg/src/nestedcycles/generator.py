"""Canonical nested generating sets of the cycle space.

3-connected planar graphs use their face boundaries. A 2-connected graph is
first extended by one edge per non-adjacent adhesion pair of its Tutte
decomposition; the generators are then the polygon cycles, the face
boundaries of the 3-connected parts, and the digons of the bonds. General
graphs are handled block by block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product

from .decomposition import (
    PartKind,
    TreeDecomposition,
    block_decomposition,
    complete_adhesions,
    is_virtual,
    tutte_decomposition,
)
from .duality import build_dual, image_of, tight_cut_sides, vertex_stars
from .embedding import RotationSystem, face_boundary_cycles, planar_embed
from .graphcore import (
    Cycle,
    EdgeSet,
    GF2Basis,
    GraphError,
    InvariantViolation,
    Multigraph,
    NotThreeConnected,
    cycle_space_dimension,
    is_circuit,
    is_connected,
    separator,
    sort_key,
    sum_all,
)
from .nestedness import NestingTable, cuts_nested
from .oracle import enumerate_circuits, orbit_closed


class GeneratorKind(Enum):
    FACE_BOUNDARY = "FaceBoundary"
    PART_CYCLE = "PartCycle"
    DIGON = "Digon"
    LOOP = "Loop"


class ExtensionRequired(GraphError):
    """Strict mode: the input needs adhesion edges added."""


@dataclass(frozen=True)
class Provenance:
    block: int
    node: int
    kind: GeneratorKind


@dataclass
class GeneratingSet:
    host: Multigraph
    cycles: list
    provenance: list
    rotation: RotationSystem
    added: tuple = ()
    parts: dict = field(default_factory=dict)  # block -> TreeDecomposition of the extended block

    def __len__(self) -> int:
        return len(self.cycles)

    def edge_sets(self) -> set:
        return {c.edges.ids for c in self.cycles}


# 3-connected


def require_three_connected(g: Multigraph) -> None:
    if not g.is_simple:
        e = next(
            e for e in g.edges
            if e.is_loop or g.multiplicity(e.u, e.v) > 1
        )
        raise NotThreeConnected(f"edge {e.id!r} is a loop or parallel edge", witness=(e.u, e.v))
    if not is_connected(g):
        raise NotThreeConnected("graph is disconnected", witness=())
    sep = separator(g, 3)
    if sep is not None:
        raise NotThreeConnected(f"{sep!r} separates the graph", witness=sep)


def generate_3connected(g: Multigraph) -> GeneratingSet:
    """Face boundaries of the (reflection-unique) plane embedding."""
    require_three_connected(g)
    rot = planar_embed(g)
    cycles = face_boundary_cycles(g, rot)
    prov = [Provenance(0, 0, GeneratorKind.FACE_BOUNDARY)] * len(cycles)
    single = TreeDecomposition(
        Multigraph([0], []), {0: g.vertex_set}, {}, {0: PartKind.THREE_CONNECTED}, {0: list(g.edges)}
    )
    return GeneratingSet(g, cycles, prov, rot, (), {0: single})


def dual_route_equivalence(g: Multigraph) -> bool:
    """Vertex stars of the dual pull back to exactly the face boundaries.

    Also checks the stars are pairwise nested tight cuts that span the
    dual's cut space.
    """
    rot = planar_embed(g)
    dp = build_dual(g, rot)
    stars = vertex_stars(dp.dual)
    pulled = {image_of(dp, s, "backward").ids for s in stars.values()}
    facial = {f.boundary.ids for f in rot.faces}
    if pulled != facial:
        return False
    cuts = [tight_cut_sides(dp.dual, s) for s in stars.values()]
    if any(c is None for c in cuts):
        return False
    if not all(cuts_nested(a, b) for a, b in combinations(cuts, 2)):
        return False
    basis = GF2Basis()
    for s in stars.values():
        basis.add(s.mask)
    return basis.rank == dp.dual.n - 1


def filtrate(d: GeneratingSet, n: int) -> list:
    if n < 1:
        raise ValueError("length bound must be positive")
    return [c for c in d.cycles if len(c) <= n]


def graded_check(g: Multigraph, d: GeneratingSet, n: int, budget: int = 1 << 20) -> EdgeSet | None:
    """First circuit of length <= n outside the span of the length-<=n generators."""
    basis = GF2Basis()
    for c in filtrate(d, n):
        basis.add(c.edges.mask)
    for circ in enumerate_circuits(g, max_length=n, budget=budget):
        if basis.solve(circ.mask) is None:
            return circ
    return None


# 2-connected


def _realisations(host: Multigraph, skeleton: list) -> list[list]:
    """Each virtual edge may stand for any real edge joining its ends in host."""
    options = []
    for e in skeleton:
        if is_virtual(e.id):
            real = sorted(host.edges_between(e.u, e.v), key=sort_key)
            if not real:
                raise InvariantViolation(f"adhesion pair {e.u!r},{e.v!r} has no real edge")
            options.append(real)
        else:
            options.append([e.id])
    return options


def _part_generators(host: Multigraph, td: TreeDecomposition, t) -> list[tuple[frozenset, GeneratorKind]]:
    kind = td.kinds[t]
    skel = td.skeletons[t]
    out = []
    if kind is PartKind.CYCLE:
        for choice in product(*_realisations(host, skel)):
            out.append((frozenset(choice), GeneratorKind.PART_CYCLE))
    elif kind is PartKind.BOND:
        real = sorted((e.id for e in skel if not is_virtual(e.id)), key=sort_key)
        for a, b in combinations(real, 2):
            out.append((frozenset((a, b)), GeneratorKind.DIGON))
    elif kind is PartKind.THREE_CONNECTED:
        sk = Multigraph(td.bags[t], skel)
        for face in generate_3connected(sk).cycles:
            edges = [sk.edge[i] for i in face.edges]
            for choice in product(*_realisations(host, edges)):
                out.append((frozenset(choice), GeneratorKind.FACE_BOUNDARY))
    return out


def generate_2connected(
    b: Multigraph, strict: bool = False, block_id: int = 0, reserved=(), embed: bool = True
) -> tuple[Multigraph, GeneratingSet]:
    td = tutte_decomposition(b)
    b_prime, added = complete_adhesions(b, td, reserved=reserved)
    if added and strict:
        raise ExtensionRequired(
            "strict mode: adhesion pairs " + ", ".join(f"{e.u}-{e.v}" for e in added) + " are not adjacent"
        )
    td_prime = tutte_decomposition(b_prime) if added else td
    cycles, prov, seen = [], [], set()
    for t in td_prime.nodes:
        for ids, kind in _part_generators(b_prime, td_prime, t):
            if ids in seen:
                continue
            seen.add(ids)
            cycles.append(Cycle.from_edges(b_prime, ids))
            prov.append(Provenance(block_id, t, kind))
    rot = planar_embed(b_prime) if embed else None
    gs = GeneratingSet(b_prime, cycles, prov, rot, tuple(e.id for e in added), {block_id: td_prime})
    return b_prime, gs


# general graphs


def generate_full(g: Multigraph, strict: bool = False) -> tuple[Multigraph, GeneratingSet]:
    bd = block_decomposition(g)
    per_block = []
    added = []
    parts = {}
    reserved = set(g.edge)
    for k, blk in enumerate(bd.blocks):
        if blk.m == 1:
            e = blk.edges[0]
            if e.is_loop:
                per_block.append((blk, [((e.id,), Provenance(k, 0, GeneratorKind.LOOP))]))
            continue
        blk_prime, gs = generate_2connected(blk, strict=strict, block_id=k, reserved=reserved, embed=False)
        reserved.update(gs.added)
        added.extend(blk_prime.edge[i] for i in gs.added)
        parts.update(gs.parts)
        per_block.append((blk_prime, [(c.edges.ids, p) for c, p in zip(gs.cycles, gs.provenance)]))
    g_prime = g.with_edges(added) if added else g
    cycles, prov = [], []
    for _, items in per_block:
        for ids, p in items:
            cycles.append(Cycle.from_edges(g_prime, ids))
            prov.append(p)
    rot = planar_embed(g_prime)
    return g_prime, GeneratingSet(g_prime, cycles, prov, rot, tuple(e.id for e in added), parts)


# expressing cycles


def express_cycle(d: GeneratingSet, c: Cycle | EdgeSet) -> list | None:
    """Generators summing to c, or None if c is outside their span."""
    target = c.edges if isinstance(c, Cycle) else c
    if target.host is not d.host and target.host != d.host:
        raise GraphError("cycle is not over the generating set's host")
    for cyc in d.cycles:
        if cyc.edges == target:
            return [cyc]
    basis = GF2Basis()
    for cyc in d.cycles:
        basis.add(cyc.edges.mask)
    combo = basis.solve(target.mask)
    if combo is None:
        return None
    chosen = [d.cycles[k] for k in range(len(d.cycles)) if combo >> k & 1]
    if sum_all(d.host, (x.edges for x in chosen)) != target:
        raise InvariantViolation("GF(2) certificate does not re-sum to the target")
    return chosen


def _edge_walk(c: Cycle) -> list:
    """Edge ids in traversal order matching c.vertex_order."""
    host = c.edges.host
    order = c.vertex_order
    used, walk = set(), []
    for k, x in enumerate(order):
        y = order[(k + 1) % len(order)]
        eid = next(
            i for i in sorted(c.edges.ids, key=sort_key)
            if i not in used and host.edge[i].ends == frozenset((x, y))
        )
        used.add(eid)
        walk.append(eid)
    return walk


def split_at_adhesion(c: Cycle, adhesion, e_xy) -> tuple[Cycle, Cycle]:
    """Close each of the two x-y paths on c with the edge e_xy."""
    host = c.edges.host
    x, y = adhesion
    if x not in c.vertices or y not in c.vertices:
        raise GraphError(f"{x!r} and {y!r} must both lie on the cycle")
    if host.edge[e_xy].ends != frozenset((x, y)):
        raise GraphError(f"edge {e_xy!r} does not join {x!r} and {y!r}")
    if e_xy in c.edges:
        raise GraphError(f"edge {e_xy!r} already lies on the cycle")
    order = list(c.vertex_order)
    walk = _edge_walk(c)
    i = order.index(x)
    order = order[i:] + order[:i]
    walk = walk[i:] + walk[:i]
    j = order.index(y)
    p1, p2 = walk[:j], walk[j:]
    return (
        Cycle.from_edges(host, set(p1) | {e_xy}),
        Cycle.from_edges(host, set(p2) | {e_xy}),
    )


# verification


@dataclass
class GeneratingReport:
    circuits_ok: bool
    nested_violation: tuple | None
    rank: int
    dimension: int
    parts_ok: bool
    aut_invariant: bool | None = None

    @property
    def nested(self) -> bool:
        return self.nested_violation is None

    @property
    def spans(self) -> bool:
        return self.rank == self.dimension

    @property
    def ok(self) -> bool:
        return (
            self.circuits_ok and self.nested and self.spans and self.parts_ok
            and self.aut_invariant is not False
        )


def parts_ok(d: GeneratingSet) -> bool:
    """Each generator is assigned exactly one part and lies inside its bag."""
    for c, p in zip(d.cycles, d.provenance):
        if p.kind is GeneratorKind.LOOP:
            continue
        td = d.parts.get(p.block)
        if td is None or p.node not in td.bags or not c.vertices <= td.bags[p.node]:
            return False
    return True


def verify_generating_set(d: GeneratingSet, automorphisms=None) -> GeneratingReport:
    host = d.host
    basis = GF2Basis()
    for c in d.cycles:
        basis.add(c.edges.mask)
    report = GeneratingReport(
        circuits_ok=all(is_circuit(host, c.edges) for c in d.cycles),
        nested_violation=NestingTable(host, d.rotation, d.cycles).first_violation(),
        rank=basis.rank,
        dimension=cycle_space_dimension(host),
        parts_ok=parts_ok(d),
    )
    if automorphisms is not None:
        report.aut_invariant = orbit_closed([c.edges for c in d.cycles], automorphisms)
    return report


def faces_sum_to_zero(d: GeneratingSet) -> bool:
    return not sum_all(d.host, (c.edges for c in d.cycles))


__all__ = [
    "ExtensionRequired",
    "GeneratingReport",
    "GeneratingSet",
    "GeneratorKind",
    "Provenance",
    "dual_route_equivalence",
    "express_cycle",
    "faces_sum_to_zero",
    "filtrate",
    "generate_2connected",
    "generate_3connected",
    "generate_full",
    "graded_check",
    "parts_ok",
    "require_three_connected",
    "split_at_adhesion",
    "verify_generating_set",
]
