"""Simple undirected graphs with dense adjacency, plus the graph families used
throughout the package.

Vertices are always ``0..n-1``. A :class:`Graph` is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph input (bad vertex, self-loop, bad parameter)."""


class ParseError(GraphError):
    """Malformed edge-list text."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    The adjacency matrix is stored as a read-only boolean array; neighbour
    bitmasks are kept alongside for the combinatorial code.
    """

    __slots__ = ("n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, adjacency: np.ndarray):
        adj = np.array(adjacency, dtype=bool)
        if adj.shape != (n, n):
            raise GraphError(f"adjacency must be {n}x{n}, got {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency is not symmetric")
        if n and adj.diagonal().any():
            raise GraphError("self-loop in adjacency")
        adj.setflags(write=False)
        self.n = n
        self._adj = adj
        self._masks = tuple(
            sum(1 << int(j) for j in np.flatnonzero(adj[i])) for i in range(n)
        )
        self._edges = tuple(
            (i, j) for i in range(n) for j in range(i + 1, n) if adj[i, j]
        )

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    def neighbor_mask(self, u: int) -> int:
        return self._masks[u]

    def neighbors(self, u: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self._adj[u])]

    def degree(self, u: int) -> int:
        return bin(self._masks[u]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(u) for u in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def adjacency_matrix(self) -> np.ndarray:
        """A(G) as a float array."""
        return self._adj.astype(float)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self._masks[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append([v for v in range(self.n) if comp >> v & 1])
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..k-1`` in the given order."""
        vs = list(vertices)
        return Graph(len(vs), self._adj[np.ix_(vs, vs)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    is_regular: bool
    is_connected: bool
    has_isolated_vertex: bool


def from_edge_list(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a graph on ``n`` vertices; repeated edges are collapsed."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u, v] = adj[v, u] = True
    return Graph(n, adj)


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    lo = min(degs) if degs else 0
    hi = max(degs) if degs else 0
    return DegreeProfile(
        min_degree=lo,
        max_degree=hi,
        is_regular=lo == hi,
        is_connected=g.is_connected(),
        has_isolated_vertex=lo == 0 and g.n > 0,
    )


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(g.n, adj)


# --- families -------------------------------------------------------------


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    return Graph(n, adj)


def gen_complete_multipartite(part_sizes: list[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive vertex ranges."""
    if not part_sizes or any(a < 1 for a in part_sizes):
        raise GraphError("every part must have size >= 1")
    labels = np.repeat(np.arange(len(part_sizes)), part_sizes)
    adj = labels[:, None] != labels[None, :]
    return Graph(len(labels), adj)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def gen_cycle_complement(n: int) -> Graph:
    return complement(gen_cycle(n))


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex i is the i-th edge of ``g`` in lexicographic order."""
    es = g.edges
    pairs = [
        (i, j)
        for (i, e), (j, f) in combinations(enumerate(es), 2)
        if set(e) & set(f)
    ]
    return from_edge_list(pairs, len(es))


def gen_triangular(v: int) -> Graph:
    """T(v): vertices are the 2-subsets of ``range(v)`` in lexicographic order."""
    if v < 3:
        raise GraphError("triangular graph needs v >= 3")
    return line_graph(gen_complete(v))


def gen_friendship(v: int) -> Graph:
    """F_v: vertex 0 is the centre, triangle i is ``{0, 2i+1, 2i+2}``."""
    if v < 1:
        raise GraphError("friendship graph needs v >= 1")
    edges = []
    for i in range(v):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return from_edge_list(edges, 2 * v + 1)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner, 10)


def gen_star(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a ``random.Random``-like ``rng``."""
    return from_edge_list(
        [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p], n
    )


# --- edge-list text format -------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0][1].split())
    except ValueError:
        raise ParseError(f"line {lines[0][0]}: expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex") from None
    try:
        return from_edge_list(edges, n)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, dest, comment: str | None = None) -> None:
    """Write to an open text stream or to a file path."""
    if hasattr(dest, "write"):
        dest.write(format_edge_list(g, comment))
        return
    with open(dest, "w") as fh:
        fh.write(format_edge_list(g, comment))


THREE_TRIANGLES_EDGES = [
    (0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4), (2, 4), (2, 5), (4, 5),
]


def three_triangles_graph() -> Graph:
    """The six-vertex graph partitioned by {0,1,2}, {1,3,4}, {2,4,5}."""
    return from_edge_list(THREE_TRIANGLES_EDGES, 6)
