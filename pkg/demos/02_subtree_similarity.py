"""The two similarity measures on small labeled trees.

Builds a few POS trees by hand, prints their edit distances, normalized
similarities, and the greedy edge mapping with its Jaccard index.
"""

import numpy as np

from treeswap import (
    LabeledTree,
    edge_mapping,
    em_similarity,
    ged,
    ged_similarity,
    levenshtein,
    route,
)
from treeswap.similarity import edges, max_distance

single_noun = LabeledTree(labels=("NOUN",), parents=(None,))
det_noun = LabeledTree(labels=("DET", "NOUN"), parents=(1, None))
det_adj_noun = LabeledTree(labels=("DET", "ADJ", "NOUN"), parents=(2, 2, None))
noun_pp = LabeledTree(
    labels=("DET", "NOUN", "ADP", "DET", "NOUN"),
    parents=(1, None, 4, 4, 1),
)

trees = {
    "N": single_noun,
    "D+N": det_noun,
    "D+A+N": det_adj_noun,
    "D+N+PP": noun_pp,
}

print("edit distance / max distance / similarity")
for name_a, tree_a in trees.items():
    for name_b, tree_b in trees.items():
        d = ged(tree_a, tree_b)
        print(
            f"  {name_a:7s} vs {name_b:7s}: "
            f"ged={d:2d}  d_max={max_distance(tree_a, tree_b):2d}  "
            f"sim={ged_similarity(tree_a, tree_b):.3f}"
        )

print("\nroutes from the root to each edge of D+N+PP:")
for edge in edges(noun_pp):
    print(f"  dep at {edge.dep_position}: {' > '.join(route(edge, noun_pp))}")

print("\nroute distance D+A+N vs D+N+PP edges:")
for e1 in edges(det_adj_noun):
    for e2 in edges(noun_pp):
        d = levenshtein(route(e1, det_adj_noun), route(e2, noun_pp))
        print(f"  {e1.dep_label}->... vs {e2.dep_label}->...: {d}")

rng = np.random.default_rng(0)
mapping = edge_mapping(det_adj_noun, noun_pp, rng)
print("\nedge mapping D+A+N -> D+N+PP:")
for e1, e2 in mapping.items():
    print(f"  ({e1.head_label}->{e1.dep_label}) maps to ({e2.head_label}->{e2.dep_label})")
print("Jaccard:", em_similarity(det_adj_noun, noun_pp, np.random.default_rng(0)))
