"""Named graphs and random planar graph generators used as fixtures."""

from __future__ import annotations

import random
from itertools import combinations

from .graphcore import Multigraph, build_graph, separator


def from_pairs(pairs, vertices=None) -> Multigraph:
    """Edges numbered 1..m in the given order."""
    pairs = list(pairs)
    vs = set(vertices or ())
    for u, v in pairs:
        vs.update((u, v))
    return build_graph(vs, [(k + 1, u, v) for k, (u, v) in enumerate(pairs)])


def complete(n: int) -> Multigraph:
    return from_pairs(combinations(range(1, n + 1), 2))


def k4() -> Multigraph:
    return complete(4)


def cycle(n: int) -> Multigraph:
    return from_pairs((k, k % n + 1) for k in range(1, n + 1))


def path(n: int) -> Multigraph:
    return from_pairs((k, k + 1) for k in range(1, n))


def prism() -> Multigraph:
    return from_pairs([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)])


def cube() -> Multigraph:
    pairs = []
    for a in range(8):
        for bit in (1, 2, 4):
            b = a ^ bit
            if a < b:
                pairs.append((a + 1, b + 1))
    return from_pairs(pairs)


def octahedron() -> Multigraph:
    return from_pairs((a, b) for a, b in combinations(range(1, 7), 2) if b - a != 3)


def dodecahedron() -> Multigraph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    middle = [(5 + k, 10 + k) for k in range(5)] + [(10 + k, 5 + (k + 1) % 5) for k in range(5)]
    inner_spokes = [(10 + k, 15 + k) for k in range(5)]
    inner = [(15 + k, 15 + (k + 1) % 5) for k in range(5)]
    pairs = outer + spokes + middle + inner_spokes + inner
    return from_pairs((a + 1, b + 1) for a, b in pairs)


def wheel(spokes: int) -> Multigraph:
    """Hub 0 joined to a rim cycle 1..spokes."""
    rim = [(k, k % spokes + 1) for k in range(1, spokes + 1)]
    return from_pairs(rim + [(0, k) for k in range(1, spokes + 1)])


def theta(paths: int = 3) -> Multigraph:
    """Hubs 'x', 'y' joined by ``paths`` paths of length 2 through m1, m2, ..."""
    pairs = []
    for k in range(1, paths + 1):
        pairs += [("x", f"m{k}"), (f"m{k}", "y")]
    return from_pairs(pairs)


def four_paths() -> Multigraph:
    """Two hubs and four internally disjoint paths of length 2 between them."""
    return theta(4)


def bowtie() -> Multigraph:
    return from_pairs([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])


def digon() -> Multigraph:
    return build_graph(["x", "y"], [("e1", "x", "y"), ("e2", "x", "y")])


def loop_and_bridges() -> Multigraph:
    """Triangle 1-2-3 with a loop at 1, a pendant path 3-4-5 and a loop at 5."""
    return build_graph(
        [1, 2, 3, 4, 5],
        [(1, 1, 2), (2, 2, 3), (3, 3, 1), (4, 1, 1), (5, 3, 4), (6, 4, 5), (7, 5, 5)],
    )


def random_triangulation(n: int, rng: random.Random, flips: int = 20) -> Multigraph:
    """Simple plane triangulation on n >= 4 vertices (hence 3-connected).

    Stacked vertex insertions followed by random edge flips that keep the
    graph simple and every degree at least 3.
    """
    if n < 4:
        raise ValueError("triangulations need at least 4 vertices")
    faces = [(1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3)]
    for v in range(5, n + 1):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, v), (b, c, v), (c, a, v)]

    def edges_of(fs):
        out = set()
        for a, b, c in fs:
            out.update({frozenset((a, b)), frozenset((b, c)), frozenset((c, a))})
        return out

    for _ in range(flips):
        edges = edges_of(faces)
        deg: dict = {}
        for e in edges:
            for x in e:
                deg[x] = deg.get(x, 0) + 1
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        a, b, c = [(a, b, c), (b, c, a), (c, a, b)][rng.randrange(3)]
        # the other face holds the directed edge b -> a
        j = next(
            k for k, f in enumerate(faces)
            if k != i and any((f[t], f[(t + 1) % 3]) == (b, a) for t in range(3))
        )
        f = faces[j]
        t = next(t for t in range(3) if (f[t], f[(t + 1) % 3]) == (b, a))
        d = f[(t + 2) % 3]
        if frozenset((c, d)) in edges or deg[a] <= 3 or deg[b] <= 3:
            continue
        faces[i] = (c, a, d)
        faces[j] = (d, b, c)
    return from_pairs(sorted(tuple(sorted(e)) for e in edges_of(faces)))


def random_two_connected_planar(max_vertices: int, rng: random.Random, parallels: int = 0) -> Multigraph:
    """Random 2-connected planar graph with at most ``max_vertices`` vertices.

    Starts from a small random triangulation, deletes edges while the graph
    stays 2-connected, subdivides edges to create polygon parts, and finally
    doubles ``parallels`` randomly chosen edges.
    """
    core = rng.randint(4, max(4, max_vertices - 4))
    g = random_triangulation(core, rng, flips=10)
    pairs = [(e.u, e.v) for e in g.edges]
    rng.shuffle(pairs)
    kept = list(pairs)
    for p in pairs:
        trial = [q for q in kept if q != p]
        h = from_pairs(trial)
        if h.n == core and separator(h, 2) is None and rng.random() < 0.5:
            kept = trial
    nxt = core + 1
    while nxt <= max_vertices and rng.random() < 0.8:
        k = rng.randrange(len(kept))
        u, v = kept.pop(k)
        kept += [(u, nxt), (nxt, v)]
        nxt += 1
    for _ in range(parallels):
        kept.append(rng.choice(kept))
    return from_pairs(kept)


FIXTURES_3CONNECTED = {
    "K4": k4,
    "prism": prism,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    **{f"W{k}": (lambda k=k: wheel(k)) for k in range(4, 9)},
}
