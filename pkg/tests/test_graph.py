import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourcycles import (
    GraphError,
    SelfLoopError,
    build_graph,
    common_neighbors,
    degree_partition,
    gen_complete,
    gen_star,
)

from _corpus import full_corpus


def test_build_c4(c4):
    assert (c4.n, c4.m) == (4, 4)
    assert [c4.degree(v) for v in range(4)] == [2, 2, 2, 2]
    assert c4.adj[0] == (1, 3)


def test_duplicates_collapse():
    g = build_graph([(0, 1), (0, 1), (1, 0)])
    assert (g.n, g.m, g.duplicates) == (2, 1, 2)


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError, match=r"\(5, 5\).*pair #0"):
        build_graph([(5, 5)])


def test_negative_id_rejected():
    with pytest.raises(GraphError):
        build_graph([(-1, 2)])


def test_n_hint_and_sparse_ids():
    g = build_graph([(0, 7)], n_hint=10)
    assert g.n == 10 and g.m == 1
    assert build_graph([(3, 7)]).n == 8


def test_immutable(c4):
    with pytest.raises(AttributeError):
        c4.n = 5
    with pytest.raises(ValueError):
        c4.indices[0] = 2


def test_csr_matches_adj(k4):
    assert k4.indptr.tolist() == [0, 3, 6, 9, 12]
    assert k4.indices.tolist() == [1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2]
    assert np.array_equal(k4.degrees, [3, 3, 3, 3])
    assert list(k4.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_partition_star():
    p = degree_partition(gen_star(5))
    assert p.is_high == (True, False, False, False, False)
    assert p.high_vertices == (0,)


def test_partition_c4(c4):
    assert degree_partition(c4).high_vertices == (0, 1, 2, 3)


def test_partition_k4_tie_break(k4):
    p = degree_partition(k4)
    assert p.high_vertices == (0, 1, 2, 3)
    for u, v in k4.edges():
        assert p.oriented(u, v) and not p.oriented(v, u)


def test_partition_exact_cube_is_strict():
    # m = 8 = 2**3: degree 2 is not high, degree 3 is
    g = build_graph([(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 7), (8, 9), (9, 10)])
    assert g.m == 8
    p = degree_partition(g)
    assert p.is_high[0] and not p.is_high[5]


def test_partition_empty():
    p = degree_partition(build_graph([], n_hint=3))
    assert p.high_vertices == () and p.threshold_cubed == 0


@pytest.mark.parametrize(
    "g, u, v, expected",
    [
        (gen_complete(4), 0, 1, [2, 3]),
        (build_graph([(0, 1), (1, 2), (2, 3), (3, 0)]), 0, 2, [1, 3]),
        (gen_star(5), 1, 2, [0]),
    ],
)
def test_common_neighbors(g, u, v, expected):
    assert common_neighbors(g, u, v) == expected


def test_common_neighbors_same_vertex(k4):
    with pytest.raises(GraphError):
        common_neighbors(k4, 1, 1)


def test_corpus_invariants():
    for g in full_corpus():
        g.check()
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
        p = degree_partition(g)
        assert p == degree_partition(g)
        hi = p.high_vertices
        assert len(hi) ** 3 * g.m < 8 * g.m ** 3 or not hi
        for v in range(g.n):
            assert p.is_high[v] == (g.degree(v) ** 3 > g.m)
        for u, v in g.edges():
            assert p.oriented(u, v) != p.oriented(v, u)
            assert p.oriented(u, v) == ((g.degree(u), u) < (g.degree(v), v))


edge_lists = st.lists(
    st.tuples(st.integers(0, 15), st.integers(0, 15)).filter(lambda e: e[0] != e[1]), max_size=60
)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_build_invariants(edges):
    g = build_graph(edges)
    g.check()
    distinct = {tuple(sorted(e)) for e in edges}
    assert g.m == len(distinct)
    assert g.duplicates == len(edges) - len(distinct)
    for u, v in distinct:
        assert g.has_edge(u, v) and g.has_edge(v, u)
