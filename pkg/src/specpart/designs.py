"""Steiner 2-designs, their block graphs, and the passage between block graphs
with a pairwise-intersecting K_t-decomposition and designs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .graph import Graph, degree_profile, from_edge_list
from .partition import CliquePartition, PartitionError, validate


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    num_points: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, num_points: int, blocks: Iterable[Iterable[int]]) -> Design:
        return cls(num_points, tuple(sorted(tuple(sorted(b)) for b in blocks)))

    @property
    def k(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    r: int
    b: int


def validate_design(d: Design) -> DesignParams:
    """Check that ``d`` is a 2-(v,k,1) design and return (v, k, r, b)."""
    v = d.num_points
    if not d.blocks:
        raise DesignError("design has no blocks")
    sizes = {len(b) for b in d.blocks}
    if len(sizes) != 1:
        raise DesignError(f"non-uniform block sizes {sorted(sizes)}")
    k = sizes.pop()
    for b in d.blocks:
        if len(set(b)) != k or any(not 0 <= p < v for p in b):
            raise DesignError(f"block {list(b)} is not a {k}-subset of the point set")
    if k < 2:
        raise DesignError("blocks must have at least 2 points")
    if k == v and len(d.blocks) == 1:
        return DesignParams(v, k, 1, 1)
    if k >= v:
        raise DesignError("block size must be below the number of points")
    seen: dict[tuple[int, int], int] = {}
    for b in d.blocks:
        for pair in combinations(b, 2):
            seen[pair] = seen.get(pair, 0) + 1
    for pair in combinations(range(v), 2):
        c = seen.get(pair, 0)
        if c != 1:
            raise DesignError(f"points {pair} lie in {c} blocks, expected 1")
    r, rem = divmod(v - 1, k - 1)
    if rem:
        raise DesignError("replication number (v-1)/(k-1) is not an integer")
    reps = [0] * v
    for b in d.blocks:
        for p in b:
            reps[p] += 1
    if any(x != r for x in reps):
        raise DesignError("points lie in different numbers of blocks")
    b = len(d.blocks)
    assert b * k * (k - 1) == v * (v - 1)
    return DesignParams(v, k, r, b)


# --- constructions -----------------------------------------------------------


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def affine_plane(q: int) -> Design:
    """AG(2, q) for prime q; point (x, y) has label x*q + y."""
    if not _is_prime(q):
        raise DesignError(f"order {q} is not prime")
    pt = lambda x, y: x * q + y  # noqa: E731
    lines = [[pt(x, (a * x + b) % q) for x in range(q)] for a in range(q) for b in range(q)]
    lines += [[pt(c, y) for y in range(q)] for c in range(q)]
    return Design.of(q * q, lines)


def _normalised_vectors(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose first nonzero coordinate is 1."""
    out = []
    for v in product(range(q), repeat=3):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            out.append(v)
    return out


def projective_plane(q: int) -> Design:
    """PG(2, q) for prime q from homogeneous coordinates."""
    if not _is_prime(q):
        raise DesignError(f"order {q} is not prime")
    pts = _normalised_vectors(q)
    index = {p: i for i, p in enumerate(pts)}
    lines = []
    for a in pts:
        lines.append([index[p] for p in pts if sum(x * y for x, y in zip(a, p)) % q == 0])
    return Design.of(len(pts), lines)


def trivial_pair_design(v: int) -> Design:
    if v < 3:
        raise DesignError("pair design needs v >= 3")
    return Design.of(v, combinations(range(v), 2))


def bose_sts(v: int) -> Design:
    """Steiner triple system on v = 6s + 3 points (Bose construction).

    Points are Z_n x {0, 1, 2} with n = 2s + 1, point (x, i) labelled i*n + x,
    using the idempotent commutative quasigroup x o y = (x + y)(n + 1)/2 mod n.
    """
    if v % 6 != 3 or v < 9:
        raise DesignError("Bose construction needs v = 3 (mod 6) and v >= 9")
    n = v // 3
    half = (n + 1) // 2
    pt = lambda x, i: (i % 3) * n + x  # noqa: E731
    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(n)]
    for x, y in combinations(range(n), 2):
        z = (x + y) * half % n
        for i in range(3):
            blocks.append([pt(x, i), pt(y, i), pt(z, i + 1)])
    return Design.of(v, blocks)


def fano_plane() -> Design:
    return projective_plane(2)


# --- block graphs ------------------------------------------------------------


def block_graph(d: Design) -> tuple[Graph, CliquePartition]:
    """Block graph (vertex i = i-th block) and its point cliques.

    Clique Q_p collects the blocks through point p; these r-cliques form a
    K_r-decomposition whose members pairwise share exactly one block.
    """
    params = validate_design(d)
    if params.b == 1:
        raise DesignError("a single-block design has an edgeless block graph")
    blocks = [set(b) for b in d.blocks]
    edges = [(i, j) for i, j in combinations(range(len(blocks)), 2)
             if len(blocks[i] & blocks[j]) == 1]
    g = from_edge_list(edges, len(blocks))
    cliques = [[i for i, b in enumerate(blocks) if p in b] for p in range(d.num_points)]
    part = CliquePartition.of(g, cliques)
    validate(part)
    return g, part


def decomposition_to_design(g: Graph, p: CliquePartition) -> Design:
    """Design whose points are the cliques of ``p`` and whose blocks are the
    sets S_u of cliques through each vertex u."""
    prof = degree_profile(g)
    if not prof.is_regular:
        raise DesignError("graph is not regular")
    try:
        validate(p)
    except PartitionError as exc:
        raise DesignError(f"not a clique partition: {exc}") from None
    sizes = {len(c) for c in p.cliques}
    if len(sizes) != 1:
        raise DesignError("partition is not a K_t-decomposition (mixed clique sizes)")
    t = sizes.pop()
    sets = [set(c) for c in p.cliques]
    for i, j in combinations(range(len(sets)), 2):
        if len(sets[i] & sets[j]) != 1:
            raise DesignError(
                f"cliques {i} and {j} meet in {len(sets[i] & sets[j])} vertices, expected 1"
            )
    d = prof.min_degree
    if d % (t - 1):
        raise DesignError("t - 1 does not divide the degree")
    blocks = [[i for i, s in enumerate(sets) if u in s] for u in range(g.n)]
    design = Design.of(len(sets), blocks)
    params = validate_design(design)
    if params.k != d // (t - 1):
        raise DesignError("block size differs from degree / (t - 1)")
    return design


def roundtrip_check(d: Design) -> bool:
    before = validate_design(d)
    g, part = block_graph(d)
    after = validate_design(decomposition_to_design(g, part))
    return before == after


# --- JSON --------------------------------------------------------------------


def design_to_dict(d: Design) -> dict:
    return {"v": d.num_points, "blocks": [list(b) for b in d.blocks]}


def design_to_json(d: Design) -> str:
    return json.dumps(design_to_dict(d), sort_keys=True)


def design_from_dict(data: dict) -> Design:
    return Design.of(int(data["v"]), data["blocks"])


def design_from_json(text: str) -> Design:
    return design_from_dict(json.loads(text))
