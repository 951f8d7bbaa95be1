"""Command-line surface: ``treeswap-parse``."""

from __future__ import annotations

import argparse
import shlex
import sys

from .adapter import (
    AdapterConfig,
    AdapterConfigError,
    ParserRunError,
    parse_corpus,
    validate_conllu,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeswap-parse", description=__doc__)
    parser.add_argument("--src-lang", required=True)
    parser.add_argument("--tgt-lang", required=True)
    parser.add_argument("--src", required=True, help="raw source text, one sentence per line")
    parser.add_argument("--tgt", required=True, help="raw target text, one sentence per line")
    parser.add_argument("--out-src", required=True)
    parser.add_argument("--out-tgt", required=True)
    parser.add_argument("--batch-size", type=int, default=64)
    parser.add_argument(
        "--src-parser", default=None,
        help="override parser command for the source side (shell-quoted)",
    )
    parser.add_argument("--tgt-parser", default=None)
    parser.add_argument(
        "--validate", action="store_true",
        help="structurally check the emitted CoNLL-U files",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = AdapterConfig(
            src_lang=args.src_lang,
            tgt_lang=args.tgt_lang,
            src_txt=args.src,
            tgt_txt=args.tgt,
            src_conllu=args.out_src,
            tgt_conllu=args.out_tgt,
            batch_size=args.batch_size,
            src_parser=tuple(shlex.split(args.src_parser)) if args.src_parser else None,
            tgt_parser=tuple(shlex.split(args.tgt_parser)) if args.tgt_parser else None,
        )
        report = parse_corpus(cfg)
    except AdapterConfigError as err:
        print(f"treeswap-parse: config error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ParserRunError, OSError) as err:
        print(f"treeswap-parse: {err}", file=sys.stderr)
        return EXIT_DATA
    print(f"kept={report.kept}")
    print(f"dropped={len(report.dropped)}")
    for index, reason in report.dropped:
        print(f"dropped_line={index} reason={reason}")
    if args.validate:
        problems = validate_conllu(args.out_src) + validate_conllu(args.out_tgt)
        for problem in problems:
            print(f"violation: {problem}", file=sys.stderr)
        if problems:
            return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
