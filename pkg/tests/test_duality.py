import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ids_of
from nestedcycles import families
from nestedcycles.duality import (
    BudgetExceeded,
    build_dual,
    circuit_iff_tight_cut,
    image_of,
    is_tight_cut,
    tight_cut_sides,
    verify_duality_exhaustive,
    vertex_stars,
)
from nestedcycles.embedding import planar_embed
from nestedcycles.graphcore import GraphError, build_graph, is_k_connected
from nestedcycles.oracle import find_isomorphism


def dual_of(g):
    return build_dual(g, planar_embed(g))


def test_k4_is_self_dual():
    dp = dual_of(families.k4())
    assert dp.dual.n == 4 and all(dp.dual.degree(v) == 3 for v in dp.dual.vertices)
    assert find_isomorphism(dp.dual, families.k4()) is not None


def test_cube_dual_is_octahedron():
    dp = dual_of(families.cube())
    assert (dp.dual.n, dp.dual.m) == (6, 12)
    assert sorted(dp.dual.degree(v) for v in dp.dual.vertices) == [4] * 6
    assert find_isomorphism(dp.dual, families.octahedron()) is not None
    assert len(planar_embed(dp.dual).faces) == 8


def test_single_edge_dual_is_a_loop():
    dp = dual_of(families.path(2))
    assert dp.dual.n == 1 and dp.dual.m == 1
    assert dp.dual.edges[0].is_loop


def test_disconnected_primal_rejected():
    g = build_graph([1, 2, 3, 4], [(1, 1, 2), (2, 3, 4)])
    with pytest.raises(GraphError):
        dual_of(g)


def test_image_round_trip():
    dp = dual_of(families.prism())
    empty = dp.primal.edge_set()
    assert image_of(dp, empty) == dp.dual.edge_set()
    f = dp.primal.edge_set([1, 4, 7])
    assert image_of(dp, image_of(dp, f), "backward") == f


def test_k4_face_maps_to_star():
    dp = dual_of(families.k4())
    stars = {s.ids for s in vertex_stars(dp.dual).values()}
    for face in dp.primal_rotation.faces:
        assert image_of(dp, face.boundary).ids in stars


def test_tight_cuts():
    g = families.k4()
    assert is_tight_cut(g, ids_of(g, (1, 2), (1, 3), (1, 4)))
    assert not is_tight_cut(g, ids_of(g, (1, 2)))
    path = build_graph("abc", [("ab", "a", "b"), ("bc", "b", "c")])
    assert not is_tight_cut(path, path.edge_set(["ab", "bc"]))
    cut = tight_cut_sides(g, ids_of(g, (1, 3), (1, 4), (2, 3), (2, 4)))
    assert cut is not None and {cut.side_x, cut.side_y} == {frozenset({1, 2}), frozenset({3, 4})}


def test_two_components_with_an_interior_edge_is_not_tight():
    # C4 plus chord 1-3: dropping 12, 23 and the chord isolates vertex 2,
    # but the chord stays inside {1,3,4}
    g = families.from_pairs([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    assert is_tight_cut(g, g.edge_set([1, 2]))
    assert not is_tight_cut(g, g.edge_set([1, 2, 5]))


def test_circuit_iff_tight_cut_examples():
    dp = dual_of(families.k4())
    g = dp.primal
    assert circuit_iff_tight_cut(dp, ids_of(g, (1, 2), (2, 3), (1, 3)))
    assert circuit_iff_tight_cut(dp, ids_of(g, (1, 2)))
    assert circuit_iff_tight_cut(dp, g.edge_set())


def test_k4_exhaustive_counts():
    for strategy in ("subsets", "enumerate"):
        rep = verify_duality_exhaustive(dual_of(families.k4()), strategy=strategy)
        assert (rep.circuits, rep.tight_cuts) == (7, 7)
        assert rep.ok


def test_cube_faces_map_to_octahedron_stars():
    dp = dual_of(families.cube())
    rep = verify_duality_exhaustive(dp, strategy="enumerate")
    assert rep.ok and rep.circuits == 28
    stars = {s.ids for s in vertex_stars(dp.dual).values()}
    assert {image_of(dp, f.boundary).ids for f in dp.primal_rotation.faces} == stars


def test_digon_duality():
    dp = dual_of(families.digon())
    rep = verify_duality_exhaustive(dp)
    assert rep.ok and rep.circuits == 1
    assert is_tight_cut(dp.dual, image_of(dp, dp.primal.edge_set(["e1", "e2"])))


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        verify_duality_exhaustive(dual_of(families.dodecahedron()), budget=16)


def test_face_length_is_dual_degree(three_connected):
    _, g = three_connected
    dp = dual_of(g)
    for k, face in enumerate(dp.primal_rotation.faces):
        assert dp.dual.degree(k) == len(face)


def test_double_dual_and_connectivity_transfer(three_connected):
    _, g = three_connected
    dp = dual_of(g)
    assert is_k_connected(g, 3) and is_k_connected(dp.dual, 3)
    assert find_isomorphism(dual_of(dp.dual).dual, g) is not None


def test_connectivity_transfer_below_three():
    # C5 is 2-connected but not 3-connected; its dual is a 5-fold bond
    dp = dual_of(families.cycle(5))
    assert not is_k_connected(families.cycle(5), 3)
    assert dp.dual.n == 2 and not is_k_connected(dp.dual, 3)


@given(st.frozensets(st.integers(1, 9)))
def test_circuit_iff_tight_cut_on_prism_subsets(ids):
    dp = dual_of(families.prism())
    assert circuit_iff_tight_cut(dp, dp.primal.edge_set(ids))
