"""Bisentence eligibility checks and object/subject subtree extraction."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import BiSentence, DepSentence

OBJECT = "object"
SUBJECT = "subject"
SWAP_TYPES = (OBJECT, SUBJECT)
RELATION_FOR_SWAP = {OBJECT: "obj", SUBJECT: "nsubj"}
NOMINAL_TAGS = frozenset({"NOUN", "PROPN"})

REASON_EDGE_COUNT = "multiple_or_missing_edge"
REASON_NON_CONTIGUOUS = "non_contiguous"
REASON_POS_MISMATCH = "pos_mismatch"
REASON_NO_NOUN = "no_noun"
REJECTION_REASONS = (
    REASON_EDGE_COUNT,
    REASON_NON_CONTIGUOUS,
    REASON_POS_MISMATCH,
    REASON_NO_NOUN,
)


@dataclass(frozen=True)
class Subtree:
    """A dependent token plus all its descendants, covering a contiguous span."""

    root_index: int
    members: tuple[int, ...]
    span: tuple[int, int]
    root_upos: str


@dataclass(frozen=True)
class Rejection:
    reason: str


@dataclass(frozen=True)
class EligiblePair:
    """A bisentence whose source and target both allow the requested swap."""

    bisentence: BiSentence
    swap_type: str
    src_subtree: Subtree
    tgt_subtree: Subtree


def find_unique_edge(sentence: DepSentence, relation: str) -> int | None:
    """Return the dependent index of the single ``relation`` edge, if unique.

    Only the bare relation qualifies: subtyped labels such as ``nsubj:pass``
    do not count.
    """
    hits = [tok.index for tok in sentence.tokens if tok.deprel == relation]
    if len(hits) == 1:
        return hits[0]
    return None


def extract_subtree(sentence: DepSentence, root_index: int) -> Subtree | None:
    """Collect ``root_index`` and all descendants; None if the span has gaps.

    Non-contiguous member sets (non-projective attachments) cannot be spliced
    as a flat span, so they are rejected rather than extracted.
    """
    if root_index == sentence.root_index:
        raise ValueError("cannot extract the whole sentence as a subtree")
    children: dict[int, list[int]] = {}
    for tok in sentence.tokens:
        children.setdefault(tok.head, []).append(tok.index)
    members = []
    stack = [root_index]
    while stack:
        node = stack.pop()
        members.append(node)
        stack.extend(children.get(node, ()))
    members.sort()
    lo, hi = members[0], members[-1]
    if hi - lo + 1 != len(members):
        return None
    return Subtree(
        root_index=root_index,
        members=tuple(members),
        span=(lo, hi),
        root_upos=sentence.token(root_index).upos,
    )


def _contains_nominal(sentence: DepSentence, subtree: Subtree) -> bool:
    return any(sentence.token(i).upos in NOMINAL_TAGS for i in subtree.members)


def check_eligibility(
    bisentence: BiSentence, swap_type: str
) -> EligiblePair | Rejection:
    """Apply the four swap constraints; reject with the first failure.

    Constraint order: (1) exactly one obj and one nsubj edge on each side,
    (2) the swap subtree spans a contiguous range on each side, (3) the two
    subtree roots share a UPOS, (4) each subtree contains a NOUN or PROPN.
    """
    relation = RELATION_FOR_SWAP[swap_type]
    sides = (bisentence.source, bisentence.target)

    for sentence in sides:
        for rel in ("obj", "nsubj"):
            if find_unique_edge(sentence, rel) is None:
                return Rejection(REASON_EDGE_COUNT)

    subtrees = []
    for sentence in sides:
        dep_index = find_unique_edge(sentence, relation)
        assert dep_index is not None
        if dep_index == sentence.root_index:
            # A relation edge hanging off the tree root cannot be spliced out.
            return Rejection(REASON_NON_CONTIGUOUS)
        subtree = extract_subtree(sentence, dep_index)
        if subtree is None:
            return Rejection(REASON_NON_CONTIGUOUS)
        subtrees.append(subtree)
    src_subtree, tgt_subtree = subtrees

    if src_subtree.root_upos != tgt_subtree.root_upos:
        return Rejection(REASON_POS_MISMATCH)

    for sentence, subtree in zip(sides, subtrees):
        if not _contains_nominal(sentence, subtree):
            return Rejection(REASON_NO_NOUN)

    return EligiblePair(
        bisentence=bisentence,
        swap_type=swap_type,
        src_subtree=src_subtree,
        tgt_subtree=tgt_subtree,
    )
