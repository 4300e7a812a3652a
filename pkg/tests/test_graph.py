import numpy as np
import pytest
from hypothesis import given, strategies as st

from specpart.graph import (
    GraphError,
    ParseError,
    complement,
    degree_profile,
    format_edge_list,
    from_edge_list,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_cycle_complement,
    gen_friendship,
    gen_path,
    gen_triangular,
    parse_edge_list,
    three_triangles_graph,
)


def test_from_edge_list_examples():
    k3 = from_edge_list({(0, 1), (1, 2), (0, 2)}, 3)
    assert k3 == gen_complete(3)
    g = three_triangles_graph()
    assert (g.n, g.m) == (6, 9)
    e = from_edge_list([], 4)
    assert (e.n, e.m) == (4, 0)


def test_duplicates_collapse():
    g = from_edge_list([(0, 1), (1, 0), (0, 1)], 2)
    assert g.m == 1


@pytest.mark.parametrize("edges,n", [([(0, 3)], 3), ([(-1, 0)], 2), ([(1, 1)], 2)])
def test_from_edge_list_rejects(edges, n):
    with pytest.raises(GraphError):
        from_edge_list(edges, n)


def test_degree_profile_examples():
    p = degree_profile(gen_complete(5))
    assert (p.min_degree, p.is_regular, p.is_connected) == (4, True, True)
    p = degree_profile(gen_friendship(2))
    assert (p.min_degree, p.max_degree, p.is_regular, p.is_connected) == (2, 4, False, True)
    p = degree_profile(gen_path(3))
    assert (p.min_degree, p.is_regular, p.is_connected) == (1, False, True)
    assert degree_profile(from_edge_list([], 3)).has_isolated_vertex


def test_complement_examples():
    assert complement(gen_complete(4)).m == 0
    c5 = complement(gen_cycle(5))
    prof = degree_profile(c5)
    assert (c5.n, c5.m, prof.min_degree, prof.is_regular, prof.is_connected) == (5, 5, 2, True, True)
    c7 = gen_cycle_complement(7)
    assert (c7.n, c7.m) == (7, 14)
    assert set(c7.degrees()) == {4}


def test_family_sizes():
    k333 = gen_complete_multipartite([3, 3, 3])
    assert (k333.n, k333.m, set(k333.degrees())) == (9, 27, {6})
    t5 = gen_triangular(5)
    assert (t5.n, t5.m, set(t5.degrees())) == (10, 30, {6})
    f2 = gen_friendship(2)
    assert (f2.n, f2.m) == (5, 6)


@pytest.mark.parametrize("p,a", [(2, 2), (3, 2), (2, 5), (4, 3), (5, 5)])
def test_multipartite_edge_count(p, a):
    g = gen_complete_multipartite([a] * p)
    assert g.m == a * a * p * (p - 1) // 2
    assert not np.any(np.diag(g.adjacency))


@pytest.mark.parametrize("v", range(3, 9))
def test_triangular_and_friendship_closed_forms(v):
    t = gen_triangular(v)
    assert t.n == v * (v - 1) // 2 and set(t.degrees()) == {2 * v - 4}
    f = gen_friendship(v)
    assert (f.n, f.m) == (2 * v + 1, 3 * v)


def test_triangular_labels_are_lexicographic_pairs():
    # vertex 0 = {0,1}, vertex 1 = {0,2}, vertex 9 = {3,4}
    t = gen_triangular(5)
    assert t.has_edge(0, 1) and not t.has_edge(0, 9)


def test_multipartite_all_ones_is_complete():
    assert gen_complete_multipartite([1] * 6) == gen_complete(6)


@pytest.mark.parametrize("bad", [lambda: gen_complete(0), lambda: gen_cycle(2),
                                 lambda: gen_triangular(2), lambda: gen_friendship(0),
                                 lambda: gen_complete_multipartite([2, 0])])
def test_generator_minimums(bad):
    with pytest.raises(GraphError):
        bad()


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list([e for e, k in zip(pairs, keep) if k], n)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs())
def test_adjacency_invariants(g):
    a = g.adjacency
    assert np.array_equal(a, a.T)
    assert not a.diagonal().any()
    assert g.m == int(a.sum()) // 2


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g, comment="x")) == g


def test_parse_edge_list_comments_and_errors():
    g = parse_edge_list("# a comment\n3 2\n0 1\n# inner\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))
    for bad in ["", "3\n", "3 2\n0 1\n", "2 1\n0 5\n", "2 1\n0 x\n", "2 1\n1 1\n"]:
        with pytest.raises(ParseError):
            parse_edge_list(bad)


def test_graph_is_immutable():
    g = gen_complete(3)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False
