"""Acceptance criteria A1-A10, one verdict line per criterion.

Verdict lines are printed in the terminal summary (see conftest) and also
when running this file with ``-s``.
"""

import time
from itertools import combinations

from conftest import triangulations, two_connected_samples
from nestedcycles import families
from nestedcycles.decomposition import PartKind, check_td_axioms, torso, tutte_decomposition
from nestedcycles.duality import build_dual, verify_duality_exhaustive
from nestedcycles.embedding import RotationSystem, all_rotation_systems, facial_invariance_check, planar_embed
from nestedcycles.generator import (
    generate_3connected,
    generate_full,
    graded_check,
    parts_ok,
    verify_generating_set,
)
from nestedcycles.graphcore import Cycle, build_graph, components, cycle_space_dimension, sum_all
from nestedcycles.nestedness import NestingTable, cuts_nested, cycles_nested, dual_cut, nested_cuts_imply_nested_cycles
from nestedcycles.oracle import (
    automorphism_group,
    canonicity_probe,
    circuits_by_subsets,
    counterexample_audit,
    enumerate_circuits,
    gf2_rank,
    orbit_closed,
)

VERDICTS: list[str] = []


def verdict(name, ok, detail):
    line = f"{name} {'PASS' if ok else 'FAIL'}: {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def a1_fixtures():
    named = [(name, make()) for name, make in families.FIXTURES_3CONNECTED.items()]
    return named + [(f"tri{k}(n={g.n})", g) for k, g in enumerate(triangulations())]


def brute_three_connected(h):
    if not h.is_simple or h.n < 4:
        return False
    return all(
        len(components(h.without_vertices(cut))) == 1
        for k in (0, 1, 2)
        for cut in combinations(h.vertices, k)
    )


def torso_ok(h, kind):
    if kind is PartKind.THREE_CONNECTED:
        return brute_three_connected(h)
    if kind is PartKind.CYCLE:
        return len(components(h)) == 1 and all(h.degree(v) == 2 for v in h.vertices)
    if kind is PartKind.BOND:
        return h.n == 2 and h.m >= 3
    return h.n == 2 and h.m == 1


def a5_fixtures():
    named = [("theta", families.theta(3)), ("four_paths", families.four_paths()), ("C4", families.cycle(4))]
    return named + [(f"rand{k}(n={g.n})", g) for k, g in enumerate(two_connected_samples(10))]


def test_a1_face_boundary_generators():
    failures = []
    for name, g in a1_fixtures():
        gs = generate_3connected(g)
        aut = automorphism_group(g, max_vertices=None)
        report = verify_generating_set(gs)
        checks = {
            "count": len(gs.cycles) == 2 - g.n + g.m,
            "nested": report.nested,
            "rank": report.rank == g.m - g.n + 1,
            "orbit_closed": orbit_closed([c.edges for c in gs.cycles], aut),
            "sum_zero": not sum_all(g, (c.edges for c in gs.cycles)),
        }
        failures += [f"{name}:{k}" for k, ok in checks.items() if not ok]
    verdict("A1", not failures, f"{len(a1_fixtures())} graphs; failures={failures}")


def test_a2_duality_condition():
    counts, failures = {}, []
    for name, make in families.FIXTURES_3CONNECTED.items():
        g = make()
        if g.m > 16:
            continue
        dp = build_dual(g, planar_embed(g))
        by_subsets = verify_duality_exhaustive(dp, strategy="subsets")
        by_listing = verify_duality_exhaustive(dp, strategy="enumerate")
        counts[name] = (by_subsets.circuits, by_subsets.tight_cuts)
        if not (by_subsets.ok and by_listing.ok) or by_listing.circuits != by_subsets.circuits:
            failures.append(name)
    ok = not failures and counts["K4"] == (7, 7)
    verdict("A2", ok, f"circuits<->tight cuts {counts}; failures={failures}")


def test_a3_nested_cuts_give_nested_cycles():
    implication_failures, converse_failures, nested_pairs, pairs = 0, 0, 0, 0
    covered = []
    for name, g in a1_fixtures():
        circuits = enumerate_circuits(g)
        if len(circuits) > 150:
            continue
        covered.append(name)
        rot = planar_embed(g)
        dp = build_dual(g, rot)
        cycles = [Cycle.from_edges(g, c) for c in circuits]
        cuts = [dual_cut(dp, c) for c in cycles]
        table = NestingTable(g, rot, cycles)
        for i, j in combinations(range(len(cycles)), 2):
            pairs += 1
            if not nested_cuts_imply_nested_cycles(dp, rot, cycles[i], cycles[j]):
                implication_failures += 1
            if table.nested(i, j):
                nested_pairs += 1
                if not cuts_nested(cuts[i], cuts[j]):
                    converse_failures += 1
    rate = converse_failures / nested_pairs if nested_pairs else 0.0
    verdict(
        "A3",
        implication_failures == 0,
        f"{pairs} pairs over {covered}; implication failures={implication_failures}; "
        f"converse failures={converse_failures}/{nested_pairs} ({rate:.1%}, reported only)",
    )


def test_a4_lower_connectivity_counterexample():
    start = time.perf_counter()
    g = families.four_paths()
    rep = counterexample_audit(g)
    circuits = enumerate_circuits(g)
    orbit = [Cycle.from_edges(g, c) for c in circuits]
    every_embedding_crosses = True
    planar = 0
    for rot in all_rotation_systems(g):
        if rot.is_planar():
            planar += 1
            table = NestingTable(g, rot, orbit)
            every_embedding_crosses &= table.first_violation() is not None
    k4 = counterexample_audit(families.k4())
    facial = {c.edges.ids for c in generate_3connected(families.k4()).cycles}
    ok = (
        rep.status == "Impossible"
        and rep.rotation_systems == 36
        and len(rep.orbits) == 1
        and len(rep.orbits[0]) == 6
        and every_embedding_crosses
        and k4.status == "Possible"
        and {c.ids for c in k4.family} == facial
    )
    verdict(
        "A4",
        ok,
        f"four paths: {rep.status}, {rep.rotation_systems} rotation systems, {planar} genus-0, "
        f"orbit sizes {[len(o) for o in rep.orbits]}; K4: {k4.status}; {time.perf_counter() - start:.2f}s",
    )


def test_a5_lower_connectivity_pipeline():
    failures = []
    for name, g in a5_fixtures():
        g_prime, gs = generate_full(g)
        rot = planar_embed(g_prime)
        report = verify_generating_set(gs)
        distinct_parts_nested = all(
            cycles_nested(g_prime, rot, c, d)
            for (c, p), (d, q) in combinations(zip(gs.cycles, gs.provenance), 2)
            if (p.block, p.node) != (q.block, q.node)
        )
        checks = {
            "planar": isinstance(rot, RotationSystem) and rot.is_planar(),
            "nested": report.nested and distinct_parts_nested,
            "rank": report.rank == cycle_space_dimension(g_prime),
            "unique_part": parts_ok(gs) and len(gs.provenance) == len(gs.cycles),
            "canonical": canonicity_probe(g, generate_full, trials=20, seed=5) is None,
        }
        failures += [f"{name}:{k}" for k, ok in checks.items() if not ok]
    verdict("A5", not failures, f"{len(a5_fixtures())} graphs; failures={failures}")


def test_a6_tutte_decomposition_soundness():
    failures = []
    for name, g in a5_fixtures():
        td = tutte_decomposition(g)
        if check_td_axioms(g, td) is not None:
            failures.append(f"{name}:axioms")
        if any(len(a) > 2 for a in td.adhesions.values()):
            failures.append(f"{name}:adhesion")
        for t in td.nodes:
            if not torso_ok(torso(g, td, t), td.kinds[t]):
                failures.append(f"{name}:torso{t}")
    td = tutte_decomposition(families.four_paths())
    shape = sorted(td.kinds[t].value for t in td.nodes)
    ok = not failures and shape == ["BondPart"] + ["CyclePart"] * 4
    verdict("A6", ok, f"four paths nodes={shape}; failures={failures}")


def test_a7_facial_invariance():
    failures, total = [], 0
    for name, g in a1_fixtures():
        aut = automorphism_group(g, max_vertices=None)
        total += len(aut)
        if not facial_invariance_check(g, planar_embed(g), aut):
            failures.append(name)
    verdict("A7", not failures, f"{total} automorphisms over {len(a1_fixtures())} graphs; failures={failures}")


def test_a8_general_graphs():
    _, bowtie = generate_full(families.bowtie())
    bowtie_rep = verify_generating_set(bowtie)
    forest = build_graph(range(1, 8), [(1, 1, 2), (2, 2, 3), (3, 2, 4), (4, 5, 6), (5, 6, 7)])
    _, forest_gs = generate_full(forest)
    g = families.loop_and_bridges()
    _, mixed = generate_full(g)
    loops = sorted(c.edges.ids for c in mixed.cycles if len(c) == 1)
    bridges = {5, 6}
    mixed_rep = verify_generating_set(mixed)
    ok = (
        len(bowtie.cycles) == 2 and bowtie_rep.nested and bowtie_rep.rank == 2
        and forest_gs.cycles == []
        and loops == [frozenset({4}), frozenset({7})]
        and not any(bridges & c.edges.ids for c in mixed.cycles)
        and mixed_rep.ok and mixed_rep.rank == cycle_space_dimension(g)
    )
    verdict(
        "A8",
        ok,
        f"bowtie {len(bowtie.cycles)} generators rank {bowtie_rep.rank}; forest {len(forest_gs.cycles)}; "
        f"loops+bridges rank {mixed_rep.rank}/{cycle_space_dimension(g)}",
    )


def test_a9_graded_survey():
    findings = {}
    for name, g in a1_fixtures():
        gs = generate_3connected(g)
        for n in (3, 4, 5):
            c = graded_check(g, gs, n, budget=1 << 22)
            if c is not None:
                findings[f"{name}/n={n}"] = sorted(c.ids, key=str)
    summary = "holds everywhere" if not findings else f"counterexamples {findings}"
    verdict("A9", True, f"survey over {len(a1_fixtures())} graphs x n in 3,4,5: {summary} (finding, not asserted)")


def test_a10_oracle_self_consistency():
    graphs = a1_fixtures() + a5_fixtures() + [
        ("bowtie", families.bowtie()),
        ("digon", families.digon()),
        ("loops", families.loop_and_bridges()),
        ("path", families.path(4)),
    ]
    cross_checked, failures = 0, []
    for name, g in graphs:
        circuits = enumerate_circuits(g, budget=1 << 22)
        if g.m <= 12:
            cross_checked += 1
            if {c.ids for c in circuits} != {c.ids for c in circuits_by_subsets(g, max_edges=12)}:
                failures.append(f"{name}:subsets")
        if gf2_rank(circuits) != g.m - g.n + len(components(g)):
            failures.append(f"{name}:rank")
    verdict("A10", not failures, f"{cross_checked} subset cross-checks, {len(graphs)} rank checks; failures={failures}")
