"""Subtree similarity: normalized tree edit distance and edge-mapping Jaccard.

Both metrics operate on POS-labeled trees in surface word order. Edit costs:
inserting or deleting a node costs 1 plus 1 for its parent edge (so 2 for any
non-root node, 1 for a root), relabeling costs 2, and a node keeping its label
costs 0. A mapped node that gains or loses a parent edge (root mapped to
non-root) pays 1 for that edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import DepSentence
from .eligibility import Subtree


@dataclass(frozen=True)
class LabeledTree:
    """An ordered tree of POS labels; ``parents[i]`` is None for the root."""

    labels: tuple[str, ...]
    parents: tuple[int | None, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0 or len(self.parents) != n:
            raise ValueError("labels and parents must be non-empty and aligned")
        roots = [i for i, p in enumerate(self.parents) if p is None]
        if len(roots) != 1:
            raise ValueError("tree must have exactly one root")
        for i, p in enumerate(self.parents):
            if p is None:
                continue
            seen = {i}
            node: int | None = p
            while node is not None:
                if node in seen:
                    raise ValueError("parent map contains a cycle")
                seen.add(node)
                node = self.parents[node]

    @property
    def root(self) -> int:
        return self.parents.index(None)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Edge:
    """A head→dependent edge, identified by the dependent's position."""

    head_label: str
    dep_label: str
    dep_position: int


def tree_from_subtree(sentence: DepSentence, subtree: Subtree) -> LabeledTree:
    """Project a sentence subtree onto a standalone UPOS-labeled tree."""
    position = {index: pos for pos, index in enumerate(subtree.members)}
    labels = tuple(sentence.token(i).upos for i in subtree.members)
    parents = tuple(
        None if i == subtree.root_index else position[sentence.token(i).head]
        for i in subtree.members
    )
    return LabeledTree(labels=labels, parents=parents)


def edges(tree: LabeledTree) -> tuple[Edge, ...]:
    """All edges of the tree, ordered by dependent position."""
    return tuple(
        Edge(
            head_label=tree.labels[parent],
            dep_label=tree.labels[pos],
            dep_position=pos,
        )
        for pos, parent in enumerate(tree.parents)
        if parent is not None
    )


def levenshtein(a: Sequence[str], b: Sequence[str]) -> int:
    """Edit distance with unit insert/delete/substitute costs."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, item_a in enumerate(a, start=1):
        current = [i]
        for j, item_b in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (item_a != item_b),
                )
            )
        previous = current
    return previous[len(b)]


def _postorder(tree: LabeledTree):
    """Postorder arrays for the edit-distance DP (1-based).

    Returns (labels, leftmost-leaf indices, per-node delete/insert costs,
    root flags), each indexed by postorder number.
    """
    children: list[list[int]] = [[] for _ in tree.labels]
    for pos, parent in enumerate(tree.parents):
        if parent is not None:
            children[parent].append(pos)

    order: list[int] = []
    leftmost: dict[int, int] = {}

    def visit(node: int) -> int:
        first_leaf = None
        for child in children[node]:
            leaf = visit(child)
            if first_leaf is None:
                first_leaf = leaf
        order.append(node)
        post_idx = len(order)
        leftmost[post_idx] = first_leaf if first_leaf is not None else post_idx
        return leftmost[post_idx]

    visit(tree.root)
    labels = [""] + [tree.labels[pos] for pos in order]
    lml = [0] + [leftmost[k] for k in range(1, len(order) + 1)]
    is_root = [False] + [tree.parents[pos] is None for pos in order]
    cost = [0] + [1 if flag else 2 for flag in is_root[1:]]
    return labels, lml, cost, is_root


def ged(t1: LabeledTree, t2: LabeledTree) -> int:
    """Minimal edit cost between two ordered labeled trees.

    Zhang-Shasha dynamic program over postorder keyroots, with the edge-aware
    costs described in the module docstring.
    """
    labels1, lml1, del_cost, root1 = _postorder(t1)
    labels2, lml2, ins_cost, root2 = _postorder(t2)
    n1, n2 = len(t1), len(t2)

    def keyroots(lml: list[int], n: int) -> list[int]:
        last_for_leaf: dict[int, int] = {}
        for k in range(1, n + 1):
            last_for_leaf[lml[k]] = k
        return sorted(last_for_leaf.values())

    def subst(i: int, j: int) -> int:
        cost = 0 if labels1[i] == labels2[j] else 2
        if root1[i] != root2[j]:
            cost += 1
        return cost

    treedist = [[0] * (n2 + 1) for _ in range(n1 + 1)]

    for x in keyroots(lml1, n1):
        lx = lml1[x]
        m = x - lx + 1
        for y in keyroots(lml2, n2):
            ly = lml2[y]
            n = y - ly + 1
            fd = [[0] * (n + 1) for _ in range(m + 1)]
            for di in range(1, m + 1):
                fd[di][0] = fd[di - 1][0] + del_cost[lx + di - 1]
            for dj in range(1, n + 1):
                fd[0][dj] = fd[0][dj - 1] + ins_cost[ly + dj - 1]
            for di in range(1, m + 1):
                i = lx + di - 1
                row = fd[di]
                above = fd[di - 1]
                whole_left = lml1[i] == lx
                for dj in range(1, n + 1):
                    j = ly + dj - 1
                    best = min(above[dj] + del_cost[i], row[dj - 1] + ins_cost[j])
                    if whole_left and lml2[j] == ly:
                        best = min(best, above[dj - 1] + subst(i, j))
                        row[dj] = best
                        treedist[i][j] = best
                    else:
                        row[dj] = min(
                            best,
                            fd[lml1[i] - lx][lml2[j] - ly] + treedist[i][j],
                        )
    return treedist[n1][n2]


def max_distance(t1: LabeledTree, t2: LabeledTree) -> int:
    """Cost of deleting one tree entirely and inserting the other."""
    return (2 * len(t1) - 1) + (2 * len(t2) - 1)


def ged_similarity(t1: LabeledTree, t2: LabeledTree) -> float:
    """Normalized edit similarity in [0, 1]; 1 means identical trees."""
    d_max = max_distance(t1, t2)
    sim = (d_max - ged(t1, t2)) / d_max
    return min(1.0, max(0.0, sim))


def edge_score(e1: Edge, e2: Edge) -> int:
    """Number of position-matching labels shared by two edges (0, 1 or 2)."""
    return int(e1.head_label == e2.head_label) + int(e1.dep_label == e2.dep_label)


def route(edge: Edge, tree: LabeledTree) -> tuple[str, ...]:
    """Labels on the path from the tree root down to the edge's dependent."""
    path = []
    node: int | None = edge.dep_position
    while node is not None:
        path.append(tree.labels[node])
        node = tree.parents[node]
    path.reverse()
    return tuple(path)


def edge_mapping(
    g1: LabeledTree, g2: LabeledTree, rng: np.random.Generator
) -> dict[Edge, Edge]:
    """Greedy injective assignment between the edge sets of two trees.

    Edges of g1 are visited in dependent order. Candidates are the not yet
    mapped edges of g2 sharing at least one positional label; ties on the
    label score are broken by the smallest route edit distance, remaining
    ties by the rng.
    """
    edges2 = list(edges(g2))
    routes2 = [route(e, g2) for e in edges2]
    taken = [False] * len(edges2)
    mapping: dict[Edge, Edge] = {}
    for e1 in edges(g1):
        candidates = [
            (edge_score(e1, e2), k)
            for k, e2 in enumerate(edges2)
            if not taken[k] and edge_score(e1, e2) >= 1
        ]
        if not candidates:
            continue
        best_score = max(score for score, _ in candidates)
        candidates = [k for score, k in candidates if score == best_score]
        route1 = route(e1, g1)
        distances = [levenshtein(route1, routes2[k]) for k in candidates]
        best_distance = min(distances)
        candidates = [
            k for k, dist in zip(candidates, distances) if dist == best_distance
        ]
        choice = candidates[0] if len(candidates) == 1 else candidates[int(rng.integers(len(candidates)))]
        taken[choice] = True
        mapping[e1] = edges2[choice]
    return mapping


def em_similarity(
    g1: LabeledTree, g2: LabeledTree, rng: np.random.Generator
) -> float:
    """Jaccard index of the edge mapping; 1.0 for two single-node trees."""
    n_edges1 = len(g1) - 1
    n_edges2 = len(g2) - 1
    if n_edges1 == 0 and n_edges2 == 0:
        return 1.0
    if n_edges1 == 0 or n_edges2 == 0:
        return 0.0
    matched = len(edge_mapping(g1, g2, rng))
    return matched / (n_edges1 + n_edges2 - matched)
