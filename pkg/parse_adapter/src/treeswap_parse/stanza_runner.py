"""Parser runner backed by stanza; requires models downloaded beforehand."""

from __future__ import annotations

import argparse
import sys


def annotate(lines: list[str], lang: str) -> str:
    import stanza

    nlp = stanza.Pipeline(
        lang=lang,
        processors="tokenize,mwt,pos,lemma,depparse",
        download_method=None,
        verbose=False,
    )
    blocks = []
    for k, line in enumerate(lines):
        doc = nlp(line)
        if not doc.sentences:
            blocks.append(f"# input_line = {k}")
            continue
        for sentence in doc.sentences:
            rows = [f"# input_line = {k}"]
            words = sentence.words
            for w, word in enumerate(words):
                end = word.end_char if word.end_char is not None else 0
                next_start = (
                    words[w + 1].start_char if w + 1 < len(words) else None
                )
                misc = "SpaceAfter=No" if next_start == end else "_"
                rows.append(
                    "\t".join(
                        [
                            str(word.id),
                            word.text,
                            word.lemma or "_",
                            word.upos or "_",
                            word.xpos or "_",
                            word.feats or "_",
                            str(word.head),
                            (word.deprel or "dep").lower(),
                            "_",
                            misc,
                        ]
                    )
                )
            blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lang", required=True)
    args = parser.parse_args(argv)
    try:
        import stanza  # noqa: F401
    except ImportError:
        print(
            "stanza is not installed; install treeswap-parse[stanza] and "
            "download models, or pass an explicit --src-parser/--tgt-parser",
            file=sys.stderr,
        )
        return 3
    lines = sys.stdin.read().splitlines()
    sys.stdout.write(annotate(lines, args.lang))
    return 0


if __name__ == "__main__":
    sys.exit(main())
