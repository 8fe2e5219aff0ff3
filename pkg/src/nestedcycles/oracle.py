"""Brute-force ground truth used to check the constructions.

Everything here favours obviously-correct enumeration over speed, and every
search has an explicit budget that raises instead of sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Iterable, Sequence

from .duality import BudgetExceeded
from .embedding import all_rotation_systems, count_rotation_systems
from .graphcore import (
    Cycle,
    EdgeSet,
    GF2Basis,
    Multigraph,
    cycle_space_dimension,
    is_circuit,
    sort_key,
)
from .nestedness import NestingTable


# circuits


def enumerate_circuits(g: Multigraph, max_length: int | None = None, budget: int = 1 << 20) -> list[EdgeSet]:
    """Every circuit of g (optionally of length <= max_length), each once.

    Each cycle is rooted at its least vertex and grown as a simple path
    through larger vertices only; both traversal directions are merged.
    """
    limit = g.m if max_length is None else max_length
    rank = {v: k for k, v in enumerate(g.vertices)}
    bit = g.bit
    found: set[int] = set()
    nodes = 0
    for e in g.edges:
        if e.is_loop and limit >= 1:
            found.add(1 << bit[e.id])
    for s in g.vertices:
        rs = rank[s]
        stack = [(s, 0, frozenset((s,)), 0)]
        while stack:
            v, mask, visited, length = stack.pop()
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"circuit enumeration exceeded {budget} search nodes")
            for eid in g.incident[v]:
                e = g.edge[eid]
                if e.is_loop or mask >> bit[eid] & 1:
                    continue
                w = e.other(v)
                if w == s:
                    if length >= 1 and length + 1 <= limit:
                        found.add(mask | 1 << bit[eid])
                    continue
                if rank[w] < rs or w in visited or length + 1 >= limit:
                    continue
                stack.append((w, mask | 1 << bit[eid], visited | {w}, length + 1))
    return [g.from_mask(m) for m in sorted(found, key=lambda m: (bin(m).count("1"), m))]


def circuits_by_subsets(g: Multigraph, max_edges: int = 16) -> list[EdgeSet]:
    """Independent check: test every edge subset with is_circuit."""
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the subset budget of {max_edges}")
    out = []
    for mask in range(1, 1 << g.m):
        f = g.from_mask(mask)
        if is_circuit(g, f):
            out.append(f)
    return sorted(out, key=lambda f: (len(f), f.mask))


# GF(2)


def gf2_rank(vectors: Iterable[EdgeSet]) -> int:
    basis = GF2Basis()
    for v in vectors:
        basis.add(v.mask)
    return basis.rank


def span_certificate(vectors: Sequence[EdgeSet], target: EdgeSet) -> list[int] | None:
    """Indices of vectors summing to target, or None when target is not in the span."""
    basis = GF2Basis()
    for v in vectors:
        basis.add(v.mask)
    combo = basis.solve(target.mask)
    if combo is None:
        return None
    return [k for k in range(len(vectors)) if combo >> k & 1]


def in_span(vectors: Sequence[EdgeSet], target: EdgeSet) -> bool:
    return span_certificate(vectors, target) is not None


# automorphisms and isomorphisms


@dataclass(frozen=True)
class Automorphism:
    vertex_map: dict
    edge_map: dict

    def __hash__(self) -> int:
        return hash((frozenset(self.vertex_map.items()), frozenset(self.edge_map.items())))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(
            {v: self.vertex_map[w] for v, w in other.vertex_map.items()},
            {e: self.edge_map[f] for e, f in other.edge_map.items()},
        )

    def inverse(self) -> "Automorphism":
        return Automorphism(
            {w: v for v, w in self.vertex_map.items()},
            {f: e for e, f in self.edge_map.items()},
        )


@dataclass
class AutomorphismGroup:
    graph: Multigraph
    elements: list

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _invariant(g: Multigraph, v) -> tuple:
    loops = sum(1 for i in g.incident[v] if g.edge[i].is_loop)
    nbr_degrees = sorted(g.degree(g.edge[i].other(v)) for i in g.incident[v] if not g.edge[i].is_loop)
    return (g.degree(v), loops, tuple(nbr_degrees))


def vertex_isomorphisms(g: Multigraph, h: Multigraph, budget: int = 1 << 22):
    """Yield vertex bijections g -> h preserving every edge multiplicity."""
    if g.n != h.n or g.m != h.m:
        return
    inv_g = {v: _invariant(g, v) for v in g.vertices}
    inv_h = {v: _invariant(h, v) for v in h.vertices}
    if sorted(inv_g.values()) != sorted(inv_h.values()):
        return
    # BFS order so every new vertex has mapped neighbours to check against
    order: list = []
    for root in sorted(g.vertices, key=lambda v: (-g.degree(v), sort_key(v))):
        if root in order:
            continue
        queue = [root]
        order.append(root)
        for x in queue:
            for y in sorted(g.neighbours(x), key=sort_key):
                if y not in order:
                    order.append(y)
                    queue.append(y)
    mult_g = {}
    for e in g.edges:
        mult_g[e.ends] = mult_g.get(e.ends, 0) + 1
    mult_h = {}
    for e in h.edges:
        mult_h[e.ends] = mult_h.get(e.ends, 0) + 1
    nodes = 0
    mapping: dict = {}
    used: set = set()

    def extend(k):
        nonlocal nodes
        if k == len(order):
            yield dict(mapping)
            return
        v = order[k]
        for w in h.vertices:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            if w in used or inv_h[w] != inv_g[v]:
                continue
            if any(
                mult_g.get(frozenset((v, u)), 0) != mult_h.get(frozenset((w, mapping[u])), 0)
                for u in order[:k]
            ):
                continue
            mapping[v] = w
            used.add(w)
            yield from extend(k + 1)
            del mapping[v]
            used.discard(w)

    yield from extend(0)


def _edge_maps(g: Multigraph, h: Multigraph, vmap: dict):
    """All edge bijections compatible with a vertex isomorphism."""
    classes_g: dict = {}
    for e in g.edges:
        classes_g.setdefault(e.ends, []).append(e.id)
    classes_h: dict = {}
    for e in h.edges:
        classes_h.setdefault(e.ends, []).append(e.id)
    keys = sorted(classes_g, key=lambda k: sorted(map(sort_key, k)))
    options = []
    for key in keys:
        src = classes_g[key]
        dst = classes_h[frozenset(vmap[x] for x in key)]
        options.append([dict(zip(src, p)) for p in permutations(dst)])
    for parts in product(*options):
        out = {}
        for p in parts:
            out.update(p)
        yield out


def find_isomorphism(g: Multigraph, h: Multigraph) -> Automorphism | None:
    for vmap in vertex_isomorphisms(g, h):
        return Automorphism(vmap, next(_edge_maps(g, h, vmap)))
    return None


def automorphism_group(g: Multigraph, max_vertices: int | None = 12, budget: int = 1 << 22) -> AutomorphismGroup:
    """Full automorphism group, edge permutations of parallel classes included."""
    if max_vertices is not None and g.n > max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceed the automorphism budget of {max_vertices}")
    elements = []
    for vmap in vertex_isomorphisms(g, g, budget=budget):
        for emap in _edge_maps(g, g, vmap):
            elements.append(Automorphism(vmap, emap))
            if len(elements) > budget:
                raise BudgetExceeded("automorphism group too large")
    return AutomorphismGroup(g, elements)


def orbit_closed(family: Iterable[EdgeSet], aut: Iterable[Automorphism]) -> bool:
    sets = {f.ids for f in family}
    return all(frozenset(a.edge_map[i] for i in s) in sets for a in aut for s in sets)


def orbits(family: Sequence[EdgeSet], aut: Iterable[Automorphism]) -> list[list[int]]:
    """Partition family indices into orbits (family must be Aut-closed)."""
    aut = list(aut)
    index = {f.ids: k for k, f in enumerate(family)}
    seen, out = set(), []
    for k, f in enumerate(family):
        if k in seen:
            continue
        orbit = sorted({index[frozenset(a.edge_map[i] for i in f.ids)] for a in aut})
        seen.update(orbit)
        out.append(orbit)
    return out


# canonicity


def random_relabelling(g: Multigraph, rng: random.Random) -> tuple[dict, dict]:
    vs = list(g.vertices)
    es = [e.id for e in g.edges]
    vt, et = vs[:], es[:]
    rng.shuffle(vt)
    rng.shuffle(et)
    return dict(zip(vs, vt)), dict(zip(es, et))


def _signature(gs, base: Multigraph, vmap: dict, emap: dict) -> tuple[frozenset, frozenset]:
    """Generators and added edges expressed in relabelled, label-free terms."""

    def token(eid):
        if eid in base.edge:
            return emap[eid]
        e = gs.host.edge[eid]
        return ("added", frozenset((vmap[e.u], vmap[e.v])))

    gens = frozenset(frozenset(token(i) for i in c.edges.ids) for c in gs.cycles)
    added = frozenset(token(i) for i in gs.added)
    return gens, added


def _unwrap(result):
    return result[1] if isinstance(result, tuple) else result


def canonicity_probe(
    g: Multigraph, pipeline: Callable, trials: int = 20, seed: int = 0, relabellings: Iterable | None = None
) -> tuple[dict, dict] | None:
    """None if pipeline commutes with every tried relabelling, else the first failing one."""
    base = _unwrap(pipeline(g))
    rng = random.Random(seed)
    tries = relabellings if relabellings is not None else (random_relabelling(g, rng) for _ in range(trials))
    for vmap, emap in tries:
        expected = _signature(base, g, vmap, emap)
        h = g.relabel(vmap, emap)
        ident_v = {v: v for v in h.vertices}
        ident_e = {e.id: e.id for e in h.edges}
        got = _signature(_unwrap(pipeline(h)), h, ident_v, ident_e)
        if got != expected:
            return vmap, emap
    return None


# the lower-connectivity counterexample


@dataclass
class AuditReport:
    possible: bool
    rotation_systems: int
    planar_rotation_systems: int
    orbits: list
    family: list | None = None
    family_rotation: object = None
    witnesses: list = field(default_factory=list)  # (rotation index, orbit union, crossing pair)

    @property
    def status(self) -> str:
        return "Possible" if self.possible else "Impossible"


def counterexample_audit(
    g: Multigraph,
    max_vertices: int = 8,
    max_degree: int = 4,
    max_rotations: int = 100_000,
    max_orbits: int = 16,
) -> AuditReport:
    """Search every plane embedding for an Aut-invariant nested generating family.

    An Aut-invariant family is a union of circuit orbits, so trying every
    union of orbits in every genus-0 rotation system settles the question.
    """
    if g.n > max_vertices or any(g.degree(v) > max_degree for v in g.vertices):
        raise BudgetExceeded("graph too large for exhaustive embedding enumeration")
    total = count_rotation_systems(g)
    if total > max_rotations:
        raise BudgetExceeded(f"{total} rotation systems exceed the budget of {max_rotations}")
    circuits = enumerate_circuits(g)
    aut = automorphism_group(g, max_vertices=max_vertices)
    orbs = orbits(circuits, aut)
    if len(orbs) > max_orbits:
        raise BudgetExceeded(f"{len(orbs)} circuit orbits exceed the budget of {max_orbits}")
    dim = cycle_space_dimension(g)
    unions = sorted(range(1, 1 << len(orbs)), key=lambda u: (bin(u).count("1"), u))
    spanning = []
    for u in unions:
        members = [k for j, orb in enumerate(orbs) if u >> j & 1 for k in orb]
        if gf2_rank(circuits[k] for k in members) == dim:
            spanning.append((u, members))
    cycles = [Cycle.from_edges(g, c) for c in circuits]
    report = AuditReport(False, 0, 0, [[circuits[k] for k in orb] for orb in orbs])
    for r, rot in enumerate(all_rotation_systems(g)):
        report.rotation_systems += 1
        if not rot.is_planar():
            continue
        report.planar_rotation_systems += 1
        table = NestingTable(g, rot, cycles)
        for u, members in spanning:
            crossing = next(
                ((i, j) for i, j in combinations(members, 2) if not table.nested(i, j)), None
            )
            if crossing is None:
                if not report.possible:
                    report.possible = True
                    report.family = [circuits[k] for k in members]
                    report.family_rotation = rot
                continue
            i, j = crossing
            report.witnesses.append((r, u, (circuits[i], circuits[j])))
    return report


__all__ = [
    "AuditReport",
    "Automorphism",
    "AutomorphismGroup",
    "automorphism_group",
    "canonicity_probe",
    "circuits_by_subsets",
    "counterexample_audit",
    "enumerate_circuits",
    "find_isomorphism",
    "gf2_rank",
    "in_span",
    "orbit_closed",
    "orbits",
    "random_relabelling",
    "span_certificate",
    "vertex_isomorphisms",
]
