import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from specpart.cliques import clique_number, cliques_up_to, is_clique, maximal_cliques
from specpart.graph import (
    GraphError,
    from_edge_list,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_cycle_complement,
    gen_friendship,
    gen_triangular,
    random_graph,
    three_triangles_graph,
)
from specpart.oracles import brute_force_cliques, brute_force_maximal_cliques


def test_is_clique_examples():
    assert is_clique(gen_complete(4), {0, 1, 2, 3})
    assert not is_clique(gen_cycle(5), {0, 1, 2})
    assert is_clique(three_triangles_graph(), {1, 3, 4})
    with pytest.raises(GraphError):
        is_clique(gen_complete(3), {0, 5})


def test_maximal_cliques_examples():
    assert maximal_cliques(gen_cycle(5)) == sorted(gen_cycle(5).edges)
    assert maximal_cliques(gen_friendship(2)) == [(0, 1, 2), (0, 3, 4)]
    t5 = maximal_cliques(gen_triangular(5))
    assert t5 == brute_force_maximal_cliques(gen_triangular(5))
    sizes = sorted(len(c) for c in t5)
    assert sizes == [3] * 10 + [4] * 5


def test_clique_number_examples():
    for p in range(2, 5):
        for a in range(1, 4):
            assert clique_number(gen_complete_multipartite([a] * p)) == p
    for s in (2, 3, 4):
        assert clique_number(gen_cycle_complement(2 * s + 1)) == s
    for v in range(4, 8):
        assert clique_number(gen_triangular(v)) == v - 1
    assert clique_number(from_edge_list([], 3)) == 1


def test_cliques_up_to_examples():
    k4 = gen_complete(4)
    assert len(cliques_up_to(k4, 2)) == 6
    assert len(cliques_up_to(k4, 3)) == 10
    g = three_triangles_graph()
    # 9 edges and the triangles {0,1,2}, {1,3,4}, {2,4,5}, {1,2,4}
    got = cliques_up_to(g, 3)
    assert got == brute_force_cliques(g, 3)
    assert len(got) == 13
    assert (1, 2, 4) in got
    with pytest.raises(ValueError):
        cliques_up_to(k4, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_enumeration_matches_brute_force(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    assert maximal_cliques(g) == brute_force_maximal_cliques(g)
    for t in range(2, n + 1):
        assert cliques_up_to(g, t) == brute_force_cliques(g, t)
    assert clique_number(g) == max((len(c) for c in brute_force_maximal_cliques(g)), default=0)


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph_counts(n):
    g = gen_complete(n)
    assert len(cliques_up_to(g, n)) == sum(comb(n, k) for k in range(2, n + 1))
    assert maximal_cliques(g) == [tuple(range(n))]
