"""Offline rule-based parser runner for tests and air-gapped setups.

Implements the adapter's line protocol with a deterministic heuristic
analysis: closed-class word lists for English and German, an SVO attachment
scheme, and honest sentence segmentation (a line holding two sentences is
reported as two blocks, which makes the adapter drop it).

Not a real parser; trees are structurally valid but linguistically crude.
"""

from __future__ import annotations

import argparse
import re
import sys

SENTENCE_BREAK = re.compile(r"(?<=[.!?])\s+(?=\S)")
TOKEN = re.compile(r"\w+|[^\w\s]", re.UNICODE)

DETS = {
    "en": {"the", "a", "an"},
    "de": {"der", "die", "das", "den", "dem", "des", "ein", "eine", "einen", "einem", "einer"},
}
PRONS = {
    "en": {"he", "she", "it", "they", "we", "i", "you", "him", "her", "them", "us", "me"},
    "de": {"er", "sie", "es", "wir", "ich", "du", "ihr", "ihn", "ihm", "uns", "mich", "dich"},
}
ADPS = {
    "en": {"in", "on", "at", "with", "of", "to", "from", "by"},
    "de": {"in", "auf", "an", "mit", "von", "zu", "aus", "bei", "nach"},
}
VERBS = {
    "en": {
        "is", "are", "was", "were", "has", "have", "had", "sees", "reads", "writes",
        "finds", "loves", "buys", "paints", "carries", "hears", "sings", "eats",
        "sleeps", "runs", "plays", "makes", "takes", "gives", "knows", "likes",
    },
    "de": {
        "ist", "sind", "war", "waren", "hat", "haben", "sieht", "liest", "schreibt",
        "findet", "liebt", "kauft", "malt", "trägt", "hört", "singt", "isst",
        "schläft", "läuft", "spielt", "macht", "nimmt", "gibt", "kennt", "mag",
    },
}
ADVS = {
    "en": {"today", "quickly", "often", "now", "here", "there", "outside"},
    "de": {"heute", "schnell", "oft", "jetzt", "hier", "dort", "draußen"},
}
# German common nouns are capitalized; only these count as proper nouns there.
DE_NAMES = {"Maria", "Anna", "Peter", "Johann", "Hans", "Berlin", "München", "Wien"}

NOMINALS = {"NOUN", "PROPN", "PRON"}


def lists_for(lang: str):
    key = lang if lang in DETS else "en"
    return DETS[key], PRONS[key], ADPS[key], VERBS[key], ADVS[key]


def tag(form: str, position: int, lang: str) -> str:
    dets, prons, adps, verbs, advs = lists_for(lang)
    if not re.search(r"\w", form):
        return "PUNCT"
    if form.isdigit():
        return "NUM"
    lower = form.lower()
    if lower in dets:
        return "DET"
    if lower in prons:
        return "PRON"
    if lower in adps:
        return "ADP"
    if lower in verbs:
        return "VERB"
    if lower in advs or (lang == "en" and lower.endswith("ly")):
        return "ADV"
    if form[0].isupper() and position > 0:
        if lang == "de":
            return "PROPN" if form in DE_NAMES else "NOUN"
        return "PROPN"
    return "NOUN"


def tokenize(text: str) -> list[tuple[str, bool]]:
    """(form, space_after) pairs from character offsets."""
    matches = list(TOKEN.finditer(text))
    tokens = []
    for i, match in enumerate(matches):
        space_after = True
        if i + 1 < len(matches):
            space_after = matches[i + 1].start() > match.end()
        tokens.append((match.group(), space_after))
    return tokens


def attach(upos: list[str]) -> list[tuple[int, str]]:
    """(head, deprel) per token; heads are 1-based, 0 marks the root."""
    n = len(upos)
    root = next((i for i, u in enumerate(upos) if u == "VERB"), 0)

    def next_nominal(start: int) -> int | None:
        for j in range(start, n):
            if upos[j] in NOMINALS:
                return j
        return None

    out: list[tuple[int, str]] = []
    saw_subject = False
    saw_object = False
    for i, pos_tag in enumerate(upos):
        if i == root:
            out.append((0, "root"))
            continue
        if pos_tag == "PUNCT":
            out.append((root + 1, "punct"))
        elif pos_tag in ("DET", "NUM"):
            target = next_nominal(i + 1)
            deprel = "det" if pos_tag == "DET" else "nummod"
            out.append((target + 1 if target is not None else root + 1, deprel))
        elif pos_tag == "ADP":
            target = next_nominal(i + 1)
            out.append((target + 1 if target is not None else root + 1, "case"))
        elif pos_tag == "ADV":
            out.append((root + 1, "advmod"))
        elif pos_tag == "VERB":
            out.append((root + 1, "dep"))
        elif pos_tag in NOMINALS:
            after_adp = i > 0 and upos[i - 1] == "ADP"
            if i < root and not saw_subject:
                out.append((root + 1, "nsubj"))
                saw_subject = True
            elif i > root and after_adp:
                out.append((root + 1, "obl"))
            elif i > root and not saw_object:
                out.append((root + 1, "obj"))
                saw_object = True
            else:
                out.append((root + 1, "dep"))
        else:
            out.append((root + 1, "dep"))
    return out


def parse_sentence(text: str, lang: str) -> list[str]:
    """CoNLL-U rows for one sentence; empty when there is nothing to parse."""
    tokens = tokenize(text)
    if not tokens:
        return []
    upos = [tag(form, i, lang) for i, (form, _) in enumerate(tokens)]
    heads = attach(upos)
    rows = []
    for i, ((form, space_after), pos_tag, (head, deprel)) in enumerate(
        zip(tokens, upos, heads), start=1
    ):
        misc = "_" if space_after else "SpaceAfter=No"
        rows.append(
            "\t".join(
                [str(i), form, form.lower(), pos_tag, "_", "_", str(head), deprel, "_", misc]
            )
        )
    return rows


def annotate(lines: list[str], lang: str) -> str:
    """Full protocol output for a batch of input lines."""
    blocks = []
    for k, line in enumerate(lines):
        pieces = [p for p in SENTENCE_BREAK.split(line.strip()) if p] or [""]
        for piece in pieces:
            rows = parse_sentence(piece, lang)
            blocks.append(f"# input_line = {k}\n" + "\n".join(rows))
    return "\n\n".join(blocks) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lang", default="en")
    args = parser.parse_args(argv)
    lines = sys.stdin.read().splitlines()
    sys.stdout.write(annotate(lines, args.lang))
    return 0


if __name__ == "__main__":
    sys.exit(main())
