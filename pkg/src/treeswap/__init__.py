"""Parallel-corpus augmentation by swapping dependency subtrees.

New sentence pairs are generated by exchanging the object or subject subtree
between two bisentences, simultaneously on the source and target side. Pair
selection can be biased by structural similarity of the swapped subtrees.
"""

from .corpus import (
    AlignmentError,
    BiSentence,
    ConlluParseError,
    DepSentence,
    ProvenanceRecord,
    Token,
    TreeStructureError,
    align_bitext,
    detokenize,
    read_conllu,
    write_output,
)
from .eligibility import (
    EligiblePair,
    Rejection,
    Subtree,
    check_eligibility,
    extract_subtree,
    find_unique_edge,
)
from .pipeline import RunConfig, RunReport, run_augment, run_stats, score_pair
from .sampling import SamplerConfig, SwapPlan, build_pool, sample_plans
from .similarity import (
    Edge,
    LabeledTree,
    edge_mapping,
    edge_score,
    em_similarity,
    ged,
    ged_similarity,
    levenshtein,
    route,
    tree_from_subtree,
)
from .swap import AugmentedPair, recase, splice, swap_pair

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "AugmentedPair",
    "BiSentence",
    "ConlluParseError",
    "DepSentence",
    "Edge",
    "EligiblePair",
    "LabeledTree",
    "ProvenanceRecord",
    "Rejection",
    "RunConfig",
    "RunReport",
    "SamplerConfig",
    "Subtree",
    "SwapPlan",
    "Token",
    "TreeStructureError",
    "align_bitext",
    "build_pool",
    "check_eligibility",
    "detokenize",
    "edge_mapping",
    "edge_score",
    "em_similarity",
    "extract_subtree",
    "find_unique_edge",
    "ged",
    "ged_similarity",
    "levenshtein",
    "read_conllu",
    "recase",
    "route",
    "run_augment",
    "run_stats",
    "sample_plans",
    "score_pair",
    "splice",
    "swap_pair",
    "tree_from_subtree",
    "write_output",
]
