import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from specpart.designs import block_graph, trivial_pair_design
from specpart.graph import (
    gen_complete,
    gen_cycle,
    gen_star,
    gen_triangular,
    line_graph,
    random_graph,
    three_triangles_graph,
)
from specpart.partition import (
    CliquePartition,
    PartitionError,
    all_edges_partition,
    clique_graph,
    incidence_matrix,
    is_kt_decomposition,
    is_valid,
    partition_from_json,
    partition_to_json,
    validate,
    verify_gram_identities,
)

EXAMPLE = [(0, 1, 2), (1, 3, 4), (2, 4, 5)]


def example_partition():
    return CliquePartition.of(three_triangles_graph(), EXAMPLE)


def t5_point_cliques():
    g, part = block_graph(trivial_pair_design(5))
    assert g == gen_triangular(5)
    return part


def test_validate_examples():
    s = validate(example_partition())
    assert (s.size, s.total_size, s.q_degrees) == (3, 9, (1, 2, 2, 1, 2, 1))
    s = validate(all_edges_partition(gen_cycle(5)))
    assert (s.size, s.total_size, s.q_degrees) == (5, 10, (2,) * 5)
    s = validate(CliquePartition.of(gen_complete(4), [range(4)]))
    assert (s.size, s.total_size) == (1, 4)


def test_validate_errors():
    g = three_triangles_graph()
    with pytest.raises(PartitionError, match="not covered"):
        validate(CliquePartition.of(g, EXAMPLE[:2]))
    with pytest.raises(PartitionError, match="covered 2 times"):
        validate(CliquePartition.of(g, EXAMPLE + [(0, 1)]))
    with pytest.raises(PartitionError, match="not a clique"):
        validate(CliquePartition.of(g, [(0, 1, 3)] + EXAMPLE[1:]))
    with pytest.raises(PartitionError, match="fewer than 2"):
        validate(CliquePartition.of(g, EXAMPLE + [(3,)]))
    assert not is_valid(CliquePartition.of(g, EXAMPLE[:2]))


def test_clique_graph_examples():
    assert clique_graph(example_partition()) == gen_complete(3)
    assert clique_graph(all_edges_partition(gen_star(4))) == gen_complete(4)
    assert clique_graph(t5_point_cliques()) == gen_complete(5)


def test_clique_graph_of_edge_partition_is_line_graph():
    g = random_graph(8, 0.5, random.Random(4))
    assert clique_graph(all_edges_partition(g)) == line_graph(g)


def test_incidence_examples():
    b = incidence_matrix(example_partition())
    assert b.shape == (6, 3)
    assert list(b.sum(axis=0)) == [3, 3, 3]
    assert tuple(b.sum(axis=1)) == (1, 2, 2, 1, 2, 1)
    b = incidence_matrix(CliquePartition.of(gen_complete(4), [range(4)]))
    assert b.tolist() == [[1]] * 4
    b = incidence_matrix(all_edges_partition(gen_complete(3)))
    assert b.shape == (3, 3) and list(b.sum(axis=0)) == [2, 2, 2]


def test_gram_examples():
    assert verify_gram_identities(example_partition())
    p = t5_point_cliques()
    assert verify_gram_identities(p)
    b = incidence_matrix(p)
    a = gen_triangular(5).adjacency.astype(int)
    assert np.array_equal(b @ b.T, a + 2 * np.eye(10, dtype=int))
    assert np.array_equal(b.T @ b, gen_complete(5).adjacency.astype(int) + 4 * np.eye(5, dtype=int))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 10), st.floats(0.1, 1.0), st.integers(0, 10**6))
def test_gram_on_edge_partitions(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    assert verify_gram_identities(all_edges_partition(g))


def test_kt_decomposition_predicate():
    assert is_kt_decomposition(t5_point_cliques(), 4)
    assert not is_kt_decomposition(t5_point_cliques(), 3)
    assert not is_kt_decomposition(example_partition(), 2)


def test_json_round_trip():
    p = example_partition()
    text = partition_to_json(p)
    assert partition_from_json(text, p.host) == p
    assert partition_from_json(text) == p
    with pytest.raises(PartitionError):
        partition_from_json(text, gen_complete(4))


def test_canonical_form():
    g = three_triangles_graph()
    a = CliquePartition.of(g, [(2, 1, 0), (5, 4, 2), (4, 3, 1)])
    assert a == example_partition()
