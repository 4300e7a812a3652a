import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from specpart.cliques import clique_number
from specpart.designs import affine_plane, block_graph, trivial_pair_design
from specpart.graph import (
    from_edge_list,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_friendship,
    gen_petersen,
    gen_triangular,
    random_graph,
    three_triangles_graph,
)
from specpart.oracles import naive_kt, naive_partition_values
from specpart.partition import is_kt_decomposition, validate, verify_gram_identities
from specpart.solve import (
    SizeGuardError,
    SolveError,
    SolveTimeout,
    find_kt_decomposition,
    iter_kt_decompositions,
    solve_cp,
    solve_cp_t,
    solve_kt,
    solve_pi,
    solve_pi_t,
)

from conftest import random_connected_graphs


def test_cp_t_examples():
    assert solve_cp_t(gen_complete(4), 2).optimum == 6
    assert solve_cp_t(three_triangles_graph(), 3).optimum == 3
    res = solve_cp_t(gen_complete(7), 3)
    assert res.optimum == 7
    assert is_kt_decomposition(res.witness, 3)


def test_cp_examples():
    for n in range(2, 8):
        assert solve_cp(gen_complete(n)).optimum == 1
    assert solve_cp(gen_triangular(5)).optimum == 5
    assert solve_cp(gen_friendship(3)).optimum == 3
    assert solve_cp(from_edge_list([], 4)).optimum == 0


def test_pi_examples():
    assert solve_pi_t(gen_complete(4), 2).optimum == 12
    assert solve_pi_t(gen_complete(7), 3).optimum == 21
    assert solve_pi_t(three_triangles_graph(), 3).optimum == 9
    for n in range(2, 8):
        assert solve_pi(gen_complete(n)).optimum == n
    assert solve_pi(three_triangles_graph()).optimum == 9
    assert solve_pi(gen_cycle(5)).optimum == 10


def test_kt_examples():
    assert solve_kt(gen_petersen(), 3).optimum == 0
    assert solve_kt(gen_complete(4), 3).optimum == 1
    assert solve_kt(gen_complete(7), 3).optimum == 7
    with pytest.raises(SolveError):
        solve_kt(gen_complete(4), 2)


def test_exclude_trivial_complete_graphs():
    for n in range(3, 8):
        res = solve_cp(gen_complete(n), exclude_trivial=True)
        assert res.optimum == n
        validate(res.witness)
        assert max(len(c) for c in res.cliques) < n
    with pytest.raises(SolveError):
        solve_cp(gen_complete(2), exclude_trivial=True)


def test_size_guard_and_timeout():
    big = gen_complete(13)  # 78 edges
    with pytest.raises(SizeGuardError):
        solve_cp_t(big, 4)
    with pytest.raises(SizeGuardError):
        solve_kt(big, 3)
    with pytest.raises(SolveTimeout):
        solve_cp_t(gen_complete_multipartite([2] * 6), 3, timeout=0.05)


def test_disconnected_graph_sums_components():
    g = from_edge_list([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)], 8)
    assert solve_cp(g).optimum == 1 + 4
    assert solve_pi(g).optimum == 3 + 8
    assert solve_kt(g, 3).optimum == 1


@pytest.mark.parametrize("t", [2, 3, 4])
def test_oracle_equivalence_sample(t):
    for g in random_connected_graphs(40, seed=100 + t):
        naive = naive_partition_values(g)
        tt = min(t, g.n)
        cp = solve_cp_t(g, t)
        pi = solve_pi_t(g, t)
        assert (cp.optimum, pi.optimum) == naive[max(tt, 2)]
        assert cp.witness.size == cp.optimum and pi.witness.total_size == pi.optimum
        assert verify_gram_identities(cp.witness) and verify_gram_identities(pi.witness)
        if t >= 3:
            assert solve_kt(g, t).optimum == naive_kt(g, t)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 7), st.floats(0.3, 1.0), st.integers(0, 10**6))
def test_monotone_in_t(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    if g.m == 0:
        return
    cps = [solve_cp_t(g, t).optimum for t in range(2, n + 1)]
    pis = [solve_pi_t(g, t).optimum for t in range(2, n + 1)]
    assert cps == sorted(cps, reverse=True)
    assert pis == sorted(pis, reverse=True)
    assert cps[0] == pis[0] // 2 == g.m
    w = max(2, clique_number(g))
    cp, pi = solve_cp(g).optimum, solve_pi(g).optimum
    assert cp == cps[-1] and pi == pis[-1]
    assert pi <= w * cp
    assert 2 * cp <= pi


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.floats(0.2, 1.0), st.integers(0, 10**6))
def test_upper_bound_sanity(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    if g.m > 22:
        return
    assert solve_cp_t(g, 3).optimum <= n * n // 4
    assert solve_pi(g).optimum <= n * n / 2


@pytest.mark.parametrize("workers", [2, 8])
def test_parallel_matches_serial(workers):
    cases = [
        (solve_cp_t, gen_complete(7), 3),
        (solve_pi_t, gen_complete_multipartite([2, 2, 2]), 3),
        (solve_cp_t, three_triangles_graph(), 3),
        (solve_cp_t, gen_triangular(5), 4),
        (solve_kt, gen_complete(7), 3),
        (solve_kt, gen_complete_multipartite([3, 3, 3]), 3),
    ]
    for fn, g, t in cases:
        a = fn(g, t, workers=1)
        b = fn(g, t, workers=workers)
        assert (a.optimum, a.witness) == (b.optimum, b.witness)


def test_kt_decomposition_examples():
    assert find_kt_decomposition(gen_complete(4), 3) is None
    octa = gen_complete_multipartite([2, 2, 2])
    d = find_kt_decomposition(octa, 3)
    assert d is not None and d.size == 4 and is_kt_decomposition(d, 3)
    t5 = find_kt_decomposition(gen_triangular(5), 4)
    assert t5 == block_graph(trivial_pair_design(5))[1]
    g, part = block_graph(affine_plane(3))
    assert find_kt_decomposition(g, 4) is not None


def test_decomposition_enumeration_is_exhaustive_on_octahedron():
    octa = gen_complete_multipartite([2, 2, 2])
    found = list(iter_kt_decompositions(octa, 3))
    # the octahedron's 8 faces split into two 4-face classes, each a decomposition
    assert len(found) == 2
    assert len({p for p in found}) == 2


def test_witness_determinism_repeated_runs():
    g = gen_complete_multipartite([3, 3, 3])
    first = solve_cp(g).witness
    for _ in range(2):
        assert solve_cp(g).witness == first
    assert math.isclose(solve_cp(g).optimum, 9)
