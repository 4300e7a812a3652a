import pytest

from specpart.designs import (
    Design,
    DesignError,
    DesignParams,
    affine_plane,
    block_graph,
    bose_sts,
    decomposition_to_design,
    design_from_json,
    design_to_json,
    fano_plane,
    projective_plane,
    roundtrip_check,
    trivial_pair_design,
    validate_design,
)
from specpart.graph import (
    gen_complete,
    gen_complete_multipartite,
    gen_friendship,
    gen_triangular,
)
from specpart.partition import CliquePartition, is_kt_decomposition
from specpart.solve import find_kt_decomposition, iter_kt_decompositions


def test_validate_examples():
    assert validate_design(fano_plane()) == DesignParams(7, 3, 3, 7)
    assert validate_design(trivial_pair_design(5)) == DesignParams(5, 2, 4, 10)
    assert validate_design(affine_plane(3)) == DesignParams(9, 3, 4, 12)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_planes(q):
    assert validate_design(affine_plane(q)) == DesignParams(q * q, q, q + 1, q * q + q)
    n = q * q + q + 1
    assert validate_design(projective_plane(q)) == DesignParams(n, q + 1, q + 1, n)


def test_plane_coincidences():
    assert projective_plane(2) == fano_plane()
    assert affine_plane(2) == trivial_pair_design(4)
    with pytest.raises(DesignError):
        affine_plane(4)
    with pytest.raises(DesignError):
        projective_plane(6)


@pytest.mark.parametrize("v,b", [(9, 12), (15, 35), (21, 70), (27, 117)])
def test_bose(v, b):
    p = validate_design(bose_sts(v))
    assert (p.v, p.k, p.b, p.r) == (v, 3, b, (v - 1) // 2)


def test_bose_rejects_bad_orders():
    for v in (3, 7, 10, 13):
        with pytest.raises(DesignError):
            bose_sts(v)


@pytest.mark.parametrize("blocks,v", [
    ([(0, 1), (0, 2)], 3),                   # pair (1,2) missing
    ([(0, 1), (1, 2), (0, 2), (0, 1)], 3),   # pair repeated
    ([(0, 1, 2), (0, 3)], 4),                # mixed sizes
    ([(0, 5)], 3),                           # point out of range
    ([], 3),
])
def test_validate_rejects(blocks, v):
    with pytest.raises(DesignError):
        validate_design(Design.of(v, blocks))


def test_block_graph_examples():
    g, part = block_graph(fano_plane())
    assert g == gen_complete(7) and is_kt_decomposition(part, 3) and part.size == 7
    g, part = block_graph(trivial_pair_design(5))
    assert g == gen_triangular(5) and is_kt_decomposition(part, 4) and part.size == 5
    g, part = block_graph(affine_plane(3))
    assert (g.n, g.m) == (12, 54)
    assert set(g.degrees()) == {9}
    assert is_kt_decomposition(part, 4) and part.size == 9
    # K_{4x3}: the 4 parallel classes are the independent sets
    assert g.adjacency.sum() == gen_complete_multipartite([3] * 4).adjacency.sum()


def test_decomposition_to_design_examples():
    g, part = block_graph(fano_plane())
    d = decomposition_to_design(g, part)
    assert validate_design(d) == DesignParams(7, 3, 3, 7)
    g, part = block_graph(trivial_pair_design(5))
    assert validate_design(decomposition_to_design(g, part)) == DesignParams(5, 2, 4, 10)


def test_octahedron_decomposition_is_an_affine_plane():
    # the 4-triangle decompositions of K_{2,2,2} pairwise meet in one vertex,
    # so they do convert, to the 2-(4,2,1) design
    octa = gen_complete_multipartite([2, 2, 2])
    for p in iter_kt_decompositions(octa, 3):
        assert validate_design(decomposition_to_design(octa, p)) == DesignParams(4, 2, 3, 6)


def test_decomposition_with_disjoint_cliques_is_rejected():
    # every K_3-decomposition of K_{3x3} contains two disjoint triangles
    g = gen_complete_multipartite([3, 3, 3])
    found = list(iter_kt_decompositions(g, 3))
    assert found
    for p in found:
        with pytest.raises(DesignError, match="meet in 0 vertices"):
            decomposition_to_design(g, p)


def test_decomposition_to_design_other_rejections():
    f2 = gen_friendship(2)
    with pytest.raises(DesignError, match="not regular"):
        decomposition_to_design(f2, CliquePartition.of(f2, [(0, 1, 2), (0, 3, 4)]))
    k4 = gen_complete(4)
    with pytest.raises(DesignError, match="mixed clique sizes"):
        decomposition_to_design(k4, CliquePartition.of(k4, [(0, 1, 2), (0, 3), (1, 3), (2, 3)]))
    with pytest.raises(DesignError, match="not a clique partition"):
        decomposition_to_design(k4, CliquePartition.of(k4, [(0, 1, 2)]))


@pytest.mark.parametrize("d", [fano_plane(), trivial_pair_design(6), affine_plane(5),
                               projective_plane(3), bose_sts(15), trivial_pair_design(4)])
def test_roundtrip(d):
    assert roundtrip_check(d)


def test_block_graph_rejects_single_block():
    with pytest.raises(DesignError):
        block_graph(Design.of(3, [(0, 1, 2)]))


def test_json_round_trip():
    d = affine_plane(3)
    assert design_from_json(design_to_json(d)) == d


def test_block_graph_decomposition_found_by_search():
    g, part = block_graph(projective_plane(3))
    d = find_kt_decomposition(g, 4, node_limit=200000)
    assert d is not None and is_kt_decomposition(d, 4)
