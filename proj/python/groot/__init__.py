"""Graph powers, girth, and square roots of girth at least six."""

from ._groot import (
    ContradictionStage,
    EqualRoots,
    Graph,
    Involution,
    ReconstructionOutcome,
    SameSquarePair,
    are_isomorphic,
    brute_force_roots,
    build_isomorphism,
    check_property_A,
    check_property_B,
    closed_neighborhood,
    common_edge_map,
    complete_power_tree_pairs,
    distance,
    emit_graph6,
    enumerate_graphs,
    enumerate_roots,
    find_same_square_pairs,
    girth,
    is_connected,
    is_maximal_clique,
    neighborhood_from_leaf,
    neighborhood_from_path,
    obs_doublestar_holds,
    obs_star_holds,
    parse_graph6,
    power,
    reconstruct_from_seed,
    shared_path,
)

__all__ = [name for name in dir() if not name.startswith("_")]
