"""Parser runner for Hungarian backed by huspacy."""

from __future__ import annotations

import sys


def annotate(lines: list[str]) -> str:
    import huspacy

    nlp = huspacy.load()
    blocks = []
    for k, line in enumerate(lines):
        doc = nlp(line)
        sentences = list(doc.sents)
        if not sentences:
            blocks.append(f"# input_line = {k}")
            continue
        for sentence in sentences:
            rows = [f"# input_line = {k}"]
            offset = sentence.start
            for token in sentence:
                index = token.i - offset + 1
                head = 0 if token.head == token else token.head.i - offset + 1
                misc = "_" if token.whitespace_ else "SpaceAfter=No"
                rows.append(
                    "\t".join(
                        [
                            str(index),
                            token.text,
                            token.lemma_ or "_",
                            token.pos_ or "_",
                            token.tag_ or "_",
                            "_",
                            str(head),
                            (token.dep_ or "dep").lower(),
                            "_",
                            misc,
                        ]
                    )
                )
            blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        import huspacy  # noqa: F401
    except ImportError:
        print(
            "huspacy is not installed; install treeswap-parse[huspacy] or pass "
            "an explicit parser command",
            file=sys.stderr,
        )
        return 3
    lines = sys.stdin.read().splitlines()
    sys.stdout.write(annotate(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
