"""Clique recognition and enumeration on bitmask adjacency."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, GraphError

Clique = tuple[int, ...]  # sorted vertex indices


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    for i, u in enumerate(vs):
        nb = g.neighbor_mask(u)
        for w in vs[i + 1:]:
            if not nb >> w & 1:
                return False
    return True


def maximal_cliques(g: Graph) -> list[Clique]:
    """All inclusion-maximal cliques, sorted; Bron-Kerbosch with Tomita pivot."""
    nbr = [g.neighbor_mask(u) for u in range(g.n)]
    out: list[Clique] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        # pivot maximising |P & N(u)| over P | X
        pivot = max(_bits(p | x), key=lambda u: bin(p & nbr[u]).count("1"))
        for v in _bits(p & ~nbr[pivot]):
            r.append(v)
            expand(r, p & nbr[v], x & nbr[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand([], (1 << g.n) - 1, 0)
    return sorted(out)


def clique_number(g: Graph) -> int:
    if g.n < 1:
        raise GraphError("clique number needs n >= 1")
    return max(len(c) for c in maximal_cliques(g))


def cliques_up_to(g: Graph, t: int) -> list[Clique]:
    """All cliques with 2 <= size <= t in lexicographic order."""
    if t < 2:
        raise GraphError("t must be >= 2")
    nbr = [g.neighbor_mask(u) for u in range(g.n)]
    out: list[Clique] = []

    def grow(c: list[int], cand: int) -> None:
        if len(c) >= 2:
            out.append(tuple(c))
        if len(c) == t:
            return
        for v in _bits(cand):
            c.append(v)
            # only higher-indexed common neighbours, so each clique appears once
            grow(c, cand & nbr[v] & ~((1 << (v + 1)) - 1))
            c.pop()

    for u in range(g.n):
        grow([u], nbr[u] & ~((1 << (u + 1)) - 1))
    return sorted(out)
