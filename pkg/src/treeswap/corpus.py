"""CoNLL-U reading, bitext alignment and augmented-bitext output."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .swap import AugmentedPair


class ConlluParseError(ValueError):
    """A CoNLL-U row that cannot be parsed (column count, non-integer head)."""


class TreeStructureError(ValueError):
    """A sentence whose head column does not form a single rooted tree."""


class AlignmentError(ValueError):
    """Source and target corpora have different sentence counts."""


@dataclass(frozen=True)
class Token:
    """One CoNLL-U word row.

    ``index`` and ``head`` use CoNLL-U numbering: tokens are 1-based and
    ``head == 0`` marks the sentence root. ``space_after`` is False when the
    MISC column carries ``SpaceAfter=No``.
    """

    index: int
    form: str
    upos: str
    head: int
    deprel: str
    space_after: bool = True


@dataclass(frozen=True)
class DepSentence:
    """A dependency tree over an ordered token sequence."""

    tokens: tuple[Token, ...]
    root_index: int
    sent_id: str | None = None

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> Token:
        """Look up a token by its 1-based CoNLL-U index."""
        return self.tokens[index - 1]


@dataclass(frozen=True)
class BiSentence:
    """An aligned (source, target) sentence pair; pair_id is the corpus position."""

    pair_id: int
    source: DepSentence
    target: DepSentence


@dataclass(frozen=True)
class ProvenanceRecord:
    """Where an augmented pair came from: its two donors and the swap applied."""

    donor_a: int
    donor_b: int
    swap_type: str
    similarity_method: str
    similarity: float | None
    direction: str

    def __post_init__(self) -> None:
        if self.donor_a == self.donor_b:
            raise ValueError("provenance donors must be distinct")


def make_sentence(tokens: Sequence[Token], sent_id: str | None = None) -> DepSentence:
    """Validate tree structure and build a DepSentence.

    Raises TreeStructureError when the head column does not describe a single
    rooted tree over consecutive 1..n token indices.
    """
    label = sent_id if sent_id is not None else "<unnamed>"
    n = len(tokens)
    if n == 0:
        raise TreeStructureError(f"sentence {label}: no tokens")
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise TreeStructureError(
                f"sentence {label}: token indices not consecutive at position {pos}"
            )
        if tok.head < 0 or tok.head > n:
            raise TreeStructureError(
                f"sentence {label}: head {tok.head} of token {pos} out of range"
            )
        if tok.head == tok.index:
            raise TreeStructureError(f"sentence {label}: token {pos} heads itself")
    roots = [tok.index for tok in tokens if tok.head == 0]
    if len(roots) != 1:
        raise TreeStructureError(
            f"sentence {label}: expected exactly one root, found {len(roots)}"
        )
    # Every token must reach the root; a loop would spin past n hops.
    for tok in tokens:
        current = tok.index
        for _ in range(n + 1):
            if current == roots[0]:
                break
            current = tokens[current - 1].head
        else:
            raise TreeStructureError(
                f"sentence {label}: cycle involving token {tok.index}"
            )
    return DepSentence(tokens=tuple(tokens), root_index=roots[0], sent_id=sent_id)


def _parse_token_row(fields: list[str]) -> Token:
    misc = fields[9]
    space_after = "SpaceAfter=No" not in misc.split("|")
    return Token(
        index=int(fields[0]),
        form=fields[1],
        upos=fields[3],
        head=int(fields[6]),
        deprel=fields[7].lower(),
        space_after=space_after,
    )


def read_conllu(path: str) -> list[DepSentence]:
    """Read a CoNLL-U file into dependency sentences, in file order.

    Multi-word-token ranges (``1-2``) and empty nodes (``1.1``) are skipped;
    comments are dropped except ``# sent_id``.
    """
    sentences: list[DepSentence] = []
    tokens: list[Token] = []
    sent_id: str | None = None
    ordinal = 1

    def flush() -> None:
        nonlocal tokens, sent_id, ordinal
        if tokens:
            try:
                sentences.append(make_sentence(tokens, sent_id))
            except TreeStructureError as err:
                raise TreeStructureError(
                    f"{path}: sentence {ordinal}: {err}"
                ) from err
            ordinal += 1
        tokens = []
        sent_id = None

    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                flush()
                continue
            if line.startswith("#"):
                if line[1:].split("=", 1)[0].strip() == "sent_id" and "=" in line:
                    sent_id = line.split("=", 1)[1].strip()
                continue
            fields = line.split("\t")
            if len(fields) != 10:
                raise ConlluParseError(
                    f"{path}: sentence {ordinal}, line {line_no}: "
                    f"expected 10 columns, got {len(fields)}"
                )
            token_id = fields[0]
            if "-" in token_id or "." in token_id:
                continue
            try:
                token = _parse_token_row(fields)
            except ValueError as err:
                raise ConlluParseError(
                    f"{path}: sentence {ordinal}, line {line_no}: {err}"
                ) from err
            tokens.append(token)
    flush()
    return sentences


def sentence_to_conllu(sentence: DepSentence) -> str:
    """Render a sentence back to a CoNLL-U block (unmodelled columns become ``_``)."""
    lines = []
    if sentence.sent_id is not None:
        lines.append(f"# sent_id = {sentence.sent_id}")
    for tok in sentence.tokens:
        misc = "_" if tok.space_after else "SpaceAfter=No"
        lines.append(
            "\t".join(
                [
                    str(tok.index),
                    tok.form,
                    "_",
                    tok.upos,
                    "_",
                    "_",
                    str(tok.head),
                    tok.deprel,
                    "_",
                    misc,
                ]
            )
        )
    return "\n".join(lines)


def write_conllu(sentences: Sequence[DepSentence], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for sentence in sentences:
            handle.write(sentence_to_conllu(sentence))
            handle.write("\n\n")


def align_bitext(
    src: Sequence[DepSentence], tgt: Sequence[DepSentence]
) -> list[BiSentence]:
    """Pair source and target sentences by position."""
    if len(src) != len(tgt):
        raise AlignmentError(
            f"corpus length mismatch: {len(src)} vs {len(tgt)} sentences"
        )
    return [
        BiSentence(pair_id=i, source=s, target=t)
        for i, (s, t) in enumerate(zip(src, tgt))
    ]


def detokenize(tokens) -> str:
    """Join token forms, inserting a space after tokens whose flag says so.

    Accepts any sequence of objects with ``form`` and ``space_after``
    attributes; never emits trailing whitespace.
    """
    parts: list[str] = []
    for i, tok in enumerate(tokens):
        parts.append(tok.form)
        if tok.space_after and i + 1 < len(tokens):
            parts.append(" ")
    return "".join(parts)


def write_output(
    originals: Sequence[BiSentence],
    augmented: Sequence["AugmentedPair"],
    out_src: str,
    out_tgt: str,
    out_prov: str | None = None,
) -> tuple[int, int]:
    """Write aligned bitext (originals first, then augmented) and provenance.

    Returns (original lines written, augmented lines written). Line i of the
    two text files always comes from the same pair.
    """
    try:
        with open(out_src, "w", encoding="utf-8") as src_handle, open(
            out_tgt, "w", encoding="utf-8"
        ) as tgt_handle:
            for pair in originals:
                src_handle.write(detokenize(pair.source.tokens) + "\n")
                tgt_handle.write(detokenize(pair.target.tokens) + "\n")
            for aug in augmented:
                src_handle.write(aug.source_text + "\n")
                tgt_handle.write(aug.target_text + "\n")
        if out_prov is not None:
            with open(out_prov, "w", encoding="utf-8") as prov_handle:
                prov_handle.write(
                    "donor_a\tdonor_b\tswap_type\tmethod\tsimilarity\tdirection\n"
                )
                for aug in augmented:
                    rec = aug.provenance
                    similarity = (
                        "" if rec.similarity is None else f"{rec.similarity:.6f}"
                    )
                    prov_handle.write(
                        f"{rec.donor_a}\t{rec.donor_b}\t{rec.swap_type}\t"
                        f"{rec.similarity_method}\t{similarity}\t{rec.direction}\n"
                    )
    except OSError as err:
        raise OSError(f"cannot write output file: {err}") from err
    return len(originals), len(augmented)
