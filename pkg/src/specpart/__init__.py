"""Spectral bounds and exact solvers for clique partitions of graphs."""

from .bounds import (
    BoundReport,
    bound_dashboard,
    classify_equality,
    cp_lower_bound,
    cp_t_lower_bound,
    cp_via_pi_bound,
    hoffman_lambda_bound,
    hoffman_q_bound,
    kt_upper_bound,
    pi_lower_bound,
    pi_t_lower_bound,
)
from .cliques import clique_number, cliques_up_to, is_clique, maximal_cliques
from .designs import (
    Design,
    affine_plane,
    block_graph,
    bose_sts,
    decomposition_to_design,
    projective_plane,
    roundtrip_check,
    trivial_pair_design,
    validate_design,
)
from .graph import (
    Graph,
    complement,
    degree_profile,
    from_edge_list,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_friendship,
    gen_triangular,
)
from .partition import (
    CliquePartition,
    clique_graph,
    incidence_matrix,
    validate,
    verify_gram_identities,
)
from .solve import (
    SolveResult,
    find_kt_decomposition,
    solve_cp,
    solve_cp_t,
    solve_kt,
    solve_pi,
    solve_pi_t,
)
from .spectral import (
    Spectrum,
    count_not_minus_one,
    lambda_min,
    spectral_radius,
    sym_eigenvalues,
)

__version__ = "0.1.0"
