from ._ngrank import (
    THEOREMS,
    BoundVerdict,
    Construction,
    Graph,
    MultiplicityRecord,
    RankPair,
    SmallRankClassification,
    SweepReport,
    build_fullrank,
    classify_small_rank,
    kernel_of_j_minus_path,
    multiplicity_identities,
    path_complement_rank,
    path_eigenvalues,
    rank_pair,
    rank_pair_mod_p,
    sweep_file,
    sweep_labeled,
    tightness_witness,
    verify,
)

__all__ = [
    "THEOREMS",
    "BoundVerdict",
    "Construction",
    "Graph",
    "MultiplicityRecord",
    "RankPair",
    "SmallRankClassification",
    "SweepReport",
    "build_fullrank",
    "classify_small_rank",
    "kernel_of_j_minus_path",
    "multiplicity_identities",
    "path_complement_rank",
    "path_eigenvalues",
    "rank_pair",
    "rank_pair_mod_p",
    "sweep_file",
    "sweep_labeled",
    "tightness_witness",
    "verify",
]
