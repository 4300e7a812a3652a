"""Inline family specs such as ``triangular:5`` or ``block-graph:affine:3``."""

from __future__ import annotations

import re

from . import designs
from .graph import (
    Graph,
    GraphError,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_cycle_complement,
    gen_friendship,
    gen_path,
    gen_petersen,
    gen_star,
    gen_triangular,
    three_triangles_graph,
)

DESIGNS = {
    "affine": designs.affine_plane,
    "projective": designs.projective_plane,
    "pairs": designs.trivial_pair_design,
    "bose": designs.bose_sts,
}

FAMILIES = (
    "complete", "multipartite", "cycle", "cycle-complement", "triangular",
    "friendship", "path", "star", "petersen", "three-triangles", "block-graph",
)


class FamilyError(GraphError):
    pass


def _ints(parts: list[str], count: int | None, name: str) -> list[int]:
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FamilyError(f"{name}: parameters must be integers, got {parts}") from None
    if count is not None and len(vals) != count:
        raise FamilyError(f"{name}: expected {count} parameter(s), got {len(vals)}")
    return vals


def design_from_spec(parts: list[str]) -> designs.Design:
    if parts == ["fano"]:
        return designs.fano_plane()
    if not parts or parts[0] not in DESIGNS:
        raise FamilyError(f"block-graph: design must be one of {sorted(DESIGNS)} or fano")
    (arg,) = _ints(parts[1:], 1, f"block-graph:{parts[0]}")
    try:
        return DESIGNS[parts[0]](arg)
    except designs.DesignError as exc:
        raise FamilyError(str(exc)) from None


def parse_family(spec: str) -> Graph:
    """Build a graph from ``name:params``.

    ``multipartite`` takes either explicit part sizes (``3,3,3``) or ``PxA``
    for P parts of size A. ``block-graph`` takes a design spec:
    ``affine:Q``, ``projective:Q``, ``pairs:V``, ``bose:V`` or ``fano``.
    """
    name, _, rest = spec.partition(":")
    parts = [p for p in re.split(r"[:,\s]+", rest) if p] if rest else []
    if name == "complete":
        return gen_complete(*_ints(parts, 1, name))
    if name == "multipartite":
        if len(parts) == 1 and "x" in parts[0]:
            p, a = _ints(parts[0].split("x"), 2, name)
            return gen_complete_multipartite([a] * p)
        return gen_complete_multipartite(_ints(parts, None, name))
    if name == "cycle":
        return gen_cycle(*_ints(parts, 1, name))
    if name == "cycle-complement":
        return gen_cycle_complement(*_ints(parts, 1, name))
    if name == "triangular":
        return gen_triangular(*_ints(parts, 1, name))
    if name == "friendship":
        return gen_friendship(*_ints(parts, 1, name))
    if name == "path":
        return gen_path(*_ints(parts, 1, name))
    if name == "star":
        return gen_star(*_ints(parts, 1, name))
    if name == "petersen":
        _ints(parts, 0, name)
        return gen_petersen()
    if name == "three-triangles":
        _ints(parts, 0, name)
        return three_triangles_graph()
    if name == "block-graph":
        return designs.block_graph(design_from_spec(parts))[0]
    raise FamilyError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
