import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ids_of
from nestedcycles import families
from nestedcycles.graphcore import (
    Cut,
    Cycle,
    EdgeSet,
    GF2Basis,
    GraphError,
    Multigraph,
    build_graph,
    components,
    cycle_space_dimension,
    edgeset_sum,
    is_circuit,
    is_k_connected,
    separator,
    sort_key,
    sum_all,
)
from nestedcycles.oracle import enumerate_circuits, gf2_rank


def test_build_k4():
    g = families.k4()
    assert (g.n, g.m) == (4, 6)
    assert g.is_simple


def test_build_digon_keeps_parallel_edges():
    g = families.digon()
    assert g.m == 2 and g.multiplicity("x", "y") == 2
    assert not g.is_simple


def test_dangling_endpoint_rejected():
    with pytest.raises(GraphError, match="dangling endpoint"):
        build_graph([1, 2], [(1, 1, 9)])


def test_duplicate_edge_id_rejected():
    with pytest.raises(GraphError, match="duplicate edge identifier"):
        build_graph([1, 2], [(1, 1, 2), (1, 2, 1)])


def test_sum_small_sets():
    g = build_graph([1, 2, 3, 4], [("e1", 1, 2), ("e2", 2, 3), ("e3", 3, 4)])
    a, b = g.edge_set(["e1", "e2"]), g.edge_set(["e2", "e3"])
    assert edgeset_sum(a, b) == g.edge_set(["e1", "e3"])
    assert not (a + a)


def test_k4_triangle_sum_is_square():
    g = families.k4()
    t123 = ids_of(g, (1, 2), (2, 3), (1, 3))
    t134 = ids_of(g, (1, 3), (3, 4), (1, 4))
    square = t123 + t134
    assert square == ids_of(g, (1, 2), (2, 3), (3, 4), (1, 4))
    assert is_circuit(g, square)
    assert square in enumerate_circuits(g)


def test_sets_from_different_hosts_do_not_mix():
    a = families.k4().edge_set([1])
    b = families.cycle(4).edge_set([1])
    with pytest.raises(GraphError):
        a + b


@pytest.mark.parametrize(
    "pairs, expected",
    [
        ([(1, 2), (2, 3), (1, 3)], True),
        ([(1, 2), (3, 4)], False),
    ],
)
def test_is_circuit_k4(pairs, expected):
    g = families.k4()
    assert is_circuit(g, ids_of(g, *pairs)) is expected


def test_two_triangles_are_not_one_circuit():
    g = families.from_pairs([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
    assert not is_circuit(g, g.edge_set(range(1, 7)))


def test_loop_is_circuit():
    g = families.loop_and_bridges()
    assert is_circuit(g, g.edge_set([4]))
    assert not is_circuit(g, g.edge_set())


def test_components():
    k4 = families.k4()
    assert components(k4) == [frozenset({1, 2, 3, 4})]
    doubled = build_graph(
        range(1, 9),
        [(e.id, e.u, e.v) for e in k4.edges] + [(e.id + 6, e.u + 4, e.v + 4) for e in k4.edges],
    )
    assert sorted(map(len, components(doubled))) == [4, 4]
    assert components(Multigraph([], [])) == []


@pytest.mark.parametrize(
    "graph, dim",
    [(families.k4, 3), (families.four_paths, 3), (families.digon, 1), (lambda: families.path(4), 0)],
)
def test_cycle_space_dimension(graph, dim):
    assert cycle_space_dimension(graph()) == dim


def test_dimension_equals_rank_of_all_circuits():
    for g in [families.k4(), families.four_paths(), families.prism(), families.bowtie(), families.loop_and_bridges()]:
        assert gf2_rank(enumerate_circuits(g)) == cycle_space_dimension(g)


def test_separators():
    assert separator(families.k4(), 3) is None
    assert separator(families.cycle(5), 3) is not None
    assert is_k_connected(families.cube(), 3)
    assert not is_k_connected(families.four_paths(), 3)
    assert separator(families.bowtie(), 2) == (3,)


def test_cycle_from_edges_orders_vertices():
    g = families.cycle(5)
    c = Cycle.from_edges(g, g.edge_set(range(1, 6)))
    walk = c.vertex_order
    assert set(walk) == {1, 2, 3, 4, 5}
    for a, b in zip(walk, walk[1:] + walk[:1]):
        assert g.multiplicity(a, b) == 1
    with pytest.raises(GraphError):
        Cycle.from_edges(g, g.edge_set([1, 2]))


def test_cut_from_side():
    g = families.k4()
    cut = Cut.from_side(g, [1])
    assert cut.edges == ids_of(g, (1, 2), (1, 3), (1, 4))
    assert cut.side_y == frozenset({2, 3, 4})


def test_sort_key_orders_mixed_tokens():
    assert sorted(["b", 3, "a", 1], key=sort_key) == [1, 3, "a", "b"]


def test_gf2_basis_certificates():
    basis = GF2Basis()
    for vec in (0b011, 0b110):
        assert basis.add(vec)
    assert not basis.add(0b101)
    assert basis.rank == 2
    combo = basis.solve(0b101)
    assert combo is not None and bin(combo).count("1") == 2
    assert basis.solve(0b1000) is None


@st.composite
def edge_triples(draw):
    g = families.prism()
    subset = st.frozensets(st.sampled_from([e.id for e in g.edges]))
    return g, draw(subset), draw(subset), draw(subset)


@given(edge_triples())
def test_edge_set_algebra(triple):
    g, a, b, c = triple
    a, b, c = EdgeSet(g, a), EdgeSet(g, b), EdgeSet(g, c)
    empty = g.edge_set()
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + a == empty
    assert a + empty == a
    assert (a + b).mask == a.mask ^ b.mask
    assert sum_all(g, [a, b, c]) == a + b + c


@given(st.frozensets(st.integers(1, 9), min_size=1))
def test_circuits_are_two_regular(ids):
    g = families.prism()
    f = g.edge_set(ids)
    if is_circuit(g, f):
        deg = {}
        for i in f:
            for x in (g.edge[i].u, g.edge[i].v):
                deg[x] = deg.get(x, 0) + 1
        assert set(deg.values()) == {2}
