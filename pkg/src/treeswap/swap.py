"""Span splicing: execute swap plans into detokenized augmented pairs."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .corpus import DepSentence, ProvenanceRecord, detokenize
from .eligibility import EligiblePair, Subtree
from .sampling import SwapPlan

A_RECEIVES_B = "a_receives_b"
B_RECEIVES_A = "b_receives_a"


class SpliceError(RuntimeError):
    """An invalid span reached the splicer; indicates an extraction bug."""


@dataclass(frozen=True)
class SwapToken:
    """A surface token in flight between sentences.

    ``was_initial`` remembers whether the token opened its original sentence,
    which drives recasing after it lands somewhere else.
    """

    form: str
    upos: str
    space_after: bool
    was_initial: bool = False


@dataclass(frozen=True)
class AugmentedPair:
    source_text: str
    target_text: str
    provenance: ProvenanceRecord


def _as_swap_tokens(sentence: DepSentence) -> list[SwapToken]:
    return [
        SwapToken(
            form=tok.form,
            upos=tok.upos,
            space_after=tok.space_after,
            was_initial=tok.index == 1,
        )
        for tok in sentence.tokens
    ]


def subtree_tokens(sentence: DepSentence, subtree: Subtree) -> list[SwapToken]:
    """The surface tokens of a subtree span, ready for splicing."""
    lo, hi = subtree.span
    return _as_swap_tokens(sentence)[lo - 1 : hi]


def splice(
    sentence: DepSentence,
    span: tuple[int, int],
    replacement: Sequence[SwapToken],
) -> list[SwapToken]:
    """Replace the 1-based inclusive span of a sentence with donor tokens.

    Spacing inside the donor material is kept; the donor's last token gets a
    following space unless it now precedes sentence-final punctuation.
    """
    lo, hi = span
    if not 1 <= lo <= hi <= len(sentence):
        raise SpliceError(f"span {span} invalid for {len(sentence)}-token sentence")
    if not replacement:
        raise SpliceError("replacement must not be empty")
    tokens = _as_swap_tokens(sentence)
    before = tokens[: lo - 1]
    after = tokens[hi:]
    donor = list(replacement)
    if after:
        closes_sentence = len(after) == 1 and after[0].upos == "PUNCT"
        donor[-1] = replace(donor[-1], space_after=not closes_sentence)
    return before + donor + after


def recase(
    tokens: Sequence[SwapToken], original_first_was_capitalized: bool
) -> list[SwapToken]:
    """Fix sentence-initial casing after a splice.

    Capitalizes a lowercase first token (when the receiving sentence was
    capitalized) and lowercases a formerly sentence-initial token that moved
    inward, unless it is a proper noun.
    """
    out = list(tokens)
    if out and original_first_was_capitalized:
        form = out[0].form
        if form and form[0].islower():
            out[0] = replace(out[0], form=form[0].upper() + form[1:])
    for pos in range(1, len(out)):
        tok = out[pos]
        if tok.was_initial and tok.upos != "PROPN":
            form = tok.form
            if form and form[0].isupper():
                out[pos] = replace(tok, form=form[0].lower() + form[1:])
    return out


def _starts_capitalized(sentence: DepSentence) -> bool:
    first = sentence.tokens[0].form
    return bool(first) and first[0].isupper()


def _swap_side(
    receiver: DepSentence, receiver_subtree: Subtree, donor: DepSentence, donor_subtree: Subtree
) -> str:
    spliced = splice(
        receiver,
        receiver_subtree.span,
        subtree_tokens(donor, donor_subtree),
    )
    return detokenize(recase(spliced, _starts_capitalized(receiver)))


def _swap_into(
    receiver: EligiblePair,
    donor: EligiblePair,
    plan: SwapPlan,
    direction: str,
) -> AugmentedPair:
    source_text = _swap_side(
        receiver.bisentence.source,
        receiver.src_subtree,
        donor.bisentence.source,
        donor.src_subtree,
    )
    target_text = _swap_side(
        receiver.bisentence.target,
        receiver.tgt_subtree,
        donor.bisentence.target,
        donor.tgt_subtree,
    )
    return AugmentedPair(
        source_text=source_text,
        target_text=target_text,
        provenance=ProvenanceRecord(
            donor_a=plan.pair_a.bisentence.pair_id,
            donor_b=plan.pair_b.bisentence.pair_id,
            swap_type=plan.swap_type,
            similarity_method=plan.method,
            similarity=plan.similarity,
            direction=direction,
        ),
    )


def swap_pair(plan: SwapPlan) -> tuple[AugmentedPair, AugmentedPair]:
    """Execute both directions of a plan.

    Source and target sides are spliced simultaneously: the first result is
    pair A with B's subtrees, the second is pair B with A's.
    """
    return (
        _swap_into(plan.pair_a, plan.pair_b, plan, A_RECEIVES_B),
        _swap_into(plan.pair_b, plan.pair_a, plan, B_RECEIVES_A),
    )
