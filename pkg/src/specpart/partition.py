"""Clique partitions: validation, clique graph, incidence matrix, JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .cliques import Clique, is_clique
from .graph import Graph, from_edge_list


class PartitionError(ValueError):
    """A clique list that is not a clique partition of its host graph."""


@dataclass(frozen=True)
class CliquePartition:
    host: Graph
    cliques: tuple[Clique, ...]

    @classmethod
    def of(cls, host: Graph, cliques: Iterable[Iterable[int]]) -> CliquePartition:
        """Canonicalise: each clique sorted, the list sorted lexicographically."""
        return cls(host, tuple(sorted(tuple(sorted(int(v) for v in c)) for c in cliques)))

    @property
    def size(self) -> int:
        return len(self.cliques)

    @property
    def total_size(self) -> int:
        return sum(len(c) for c in self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class PartitionStats:
    size: int
    total_size: int
    q_degrees: tuple[int, ...]
    max_clique_size: int


def validate(p: CliquePartition) -> PartitionStats:
    g = p.host
    cover: dict[tuple[int, int], int] = {}
    for c in p.cliques:
        if len(c) < 2:
            raise PartitionError(f"clique {list(c)} has fewer than 2 vertices")
        if len(set(c)) != len(c):
            raise PartitionError(f"clique {list(c)} repeats a vertex")
        if not is_clique(g, c):
            raise PartitionError(f"{list(c)} is not a clique of the host graph")
        for e in combinations(c, 2):
            cover[e] = cover.get(e, 0) + 1
    for e in g.edges:
        k = cover.get(e, 0)
        if k == 0:
            raise PartitionError(f"edge {e} is not covered")
        if k > 1:
            raise PartitionError(f"edge {e} is covered {k} times")
    qdeg = [0] * g.n
    for c in p.cliques:
        for v in c:
            qdeg[v] += 1
    stats = PartitionStats(
        size=p.size,
        total_size=p.total_size,
        q_degrees=tuple(qdeg),
        max_clique_size=max((len(c) for c in p.cliques), default=0),
    )
    assert stats.total_size == sum(qdeg)
    assert sum(comb(len(c), 2) for c in p.cliques) == g.m
    return stats


def is_valid(p: CliquePartition) -> bool:
    try:
        validate(p)
    except PartitionError:
        return False
    return True


def clique_graph(p: CliquePartition) -> Graph:
    """Graph on the cliques (in partition order), adjacent when they meet."""
    validate(p)
    sets = [set(c) for c in p.cliques]
    pairs = [(i, j) for i, j in combinations(range(len(sets)), 2) if sets[i] & sets[j]]
    return from_edge_list(pairs, len(sets))


def incidence_matrix(p: CliquePartition) -> np.ndarray:
    """n x v 0/1 integer matrix, entry (u, i) = 1 iff u lies in clique i."""
    validate(p)
    b = np.zeros((p.host.n, p.size), dtype=np.int64)
    for i, c in enumerate(p.cliques):
        b[list(c), i] = 1
    return b


def verify_gram_identities(p: CliquePartition) -> bool:
    """Exact integer check of B B^T = A + D and B^T B = A(clique graph) + E."""
    stats = validate(p)
    b = incidence_matrix(p)
    a = p.host.adjacency.astype(np.int64)
    d = np.diag(np.array(stats.q_degrees, dtype=np.int64))
    omega = clique_graph(p).adjacency.astype(np.int64)
    e = np.diag(np.array([len(c) for c in p.cliques], dtype=np.int64))
    return bool(np.array_equal(b @ b.T, a + d) and np.array_equal(b.T @ b, omega + e))


def all_edges_partition(g: Graph) -> CliquePartition:
    return CliquePartition.of(g, g.edges)


def is_kt_decomposition(p: CliquePartition, t: int) -> bool:
    return is_valid(p) and all(len(c) == t for c in p.cliques)


# --- JSON ------------------------------------------------------------------


def partition_to_dict(p: CliquePartition) -> dict:
    return {"n": p.host.n, "cliques": [list(c) for c in p.cliques]}


def partition_to_json(p: CliquePartition) -> str:
    return json.dumps(partition_to_dict(p), sort_keys=True)


def partition_from_dict(data: dict, host: Graph | None = None) -> CliquePartition:
    """Rebuild a partition. Without a host graph, the host is taken to be the
    union of the cliques on ``n`` vertices."""
    n = int(data["n"])
    cliques = [tuple(int(v) for v in c) for c in data["cliques"]]
    if host is None:
        host = from_edge_list([e for c in cliques for e in combinations(c, 2)], n)
    elif host.n != n:
        raise PartitionError(f"partition is on {n} vertices, host has {host.n}")
    return CliquePartition.of(host, cliques)


def partition_from_json(text: str, host: Graph | None = None) -> CliquePartition:
    return partition_from_dict(json.loads(text), host)
