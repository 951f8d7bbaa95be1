"""Command-line surface: ``treeswap augment | stats | score``."""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import AlignmentError, ConlluParseError, TreeStructureError
from .pipeline import (
    ConfigError,
    IneligibleSentenceError,
    RunConfig,
    RunReport,
    run_augment,
    run_stats,
    score_pair,
)
from .sampling import SamplerConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_DATA_ERRORS = (
    ConlluParseError,
    TreeStructureError,
    AlignmentError,
    IneligibleSentenceError,
)

# Config-file keys mirror the long flags one-to-one.
_CONFIG_KEYS = (
    "src",
    "tgt",
    "out_src",
    "out_tgt",
    "provenance",
    "method",
    "threshold",
    "ratio",
    "swap",
    "seed",
    "no_originals",
    "stats",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_sampler_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=("random", "ged", "em"), default=None)
    parser.add_argument("--threshold", type=float, default=None)
    parser.add_argument("--swap", choices=("object", "subject", "both"), default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--config", default=None, help="JSON config file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeswap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    augment = sub.add_parser("augment", help="generate augmented bitext")
    augment.add_argument("--src", default=None, help="source-side CoNLL-U file")
    augment.add_argument("--tgt", default=None, help="target-side CoNLL-U file")
    augment.add_argument("--out-src", dest="out_src", default=None)
    augment.add_argument("--out-tgt", dest="out_tgt", default=None)
    augment.add_argument("--provenance", default=None)
    augment.add_argument("--ratio", type=float, default=None)
    augment.add_argument(
        "--no-originals", dest="no_originals", action="store_true", default=None
    )
    augment.add_argument("--stats", default=None)
    _add_sampler_flags(augment)

    stats = sub.add_parser("stats", help="report eligibility and similarity spread")
    stats.add_argument("--src", default=None)
    stats.add_argument("--tgt", default=None)
    stats.add_argument("--stats", default=None)
    _add_sampler_flags(stats)

    score = sub.add_parser("score", help="similarity of two single-sentence files")
    score.add_argument("--src", default=None, help="first CoNLL-U file")
    score.add_argument("--tgt", default=None, help="second CoNLL-U file")
    _add_sampler_flags(score)

    return parser


def _load_config_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise ConfigError(f"cannot read config file: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigError(f"config file {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def _merged(args: argparse.Namespace) -> dict:
    """Flags beat config-file values beat defaults."""
    merged = dict.fromkeys(_CONFIG_KEYS)
    if getattr(args, "config", None):
        merged.update(_load_config_file(args.config))
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return merged


def _sampler_config(merged: dict) -> SamplerConfig:
    defaults = SamplerConfig()
    try:
        return SamplerConfig(
            method=merged["method"] or defaults.method,
            threshold=(
                defaults.threshold
                if merged["threshold"] is None
                else float(merged["threshold"])
            ),
            ratio=defaults.ratio if merged["ratio"] is None else float(merged["ratio"]),
            swap_type=merged["swap"] or defaults.swap_type,
            seed=defaults.seed if merged["seed"] is None else int(merged["seed"]),
        )
    except ValueError as err:
        raise ConfigError(str(err)) from err


def _require(merged: dict, keys: tuple[str, ...], command: str) -> None:
    missing = [f"--{key.replace('_', '-')}" for key in keys if merged[key] is None]
    if missing:
        raise ConfigError(f"{command} requires {', '.join(missing)}")


def _run_config(merged: dict) -> RunConfig:
    return RunConfig(
        src_conllu=merged["src"],
        tgt_conllu=merged["tgt"],
        out_src=merged["out_src"],
        out_tgt=merged["out_tgt"],
        out_provenance=merged["provenance"],
        sampler=_sampler_config(merged),
        include_originals=not bool(merged["no_originals"]),
        stats_path=merged["stats"],
    )


def _print_report(report: RunReport) -> None:
    for key, value in report.to_flat_dict().items():
        print(f"{key}={value}")


def _dispatch(args: argparse.Namespace) -> int:
    merged = _merged(args)
    if args.command == "augment":
        _require(merged, ("src", "tgt", "out_src", "out_tgt"), "augment")
        report = run_augment(_run_config(merged))
        _print_report(report)
        return EXIT_OK
    if args.command == "stats":
        _require(merged, ("src", "tgt"), "stats")
        report = run_stats(_run_config(merged))
        _print_report(report)
        return EXIT_OK
    if args.command == "score":
        _require(merged, ("src", "tgt"), "score")
        swap_type = merged["swap"] or "object"
        if swap_type == "both":
            raise ConfigError("score requires --swap object or subject")
        method = merged["method"] or "ged"
        seed = int(merged["seed"]) if merged["seed"] is not None else 0
        value = score_pair(merged["src"], merged["tgt"], swap_type, method, seed)
        print(f"{value:.4f}")
        return EXIT_OK
    raise ConfigError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ConfigError as err:
        print(f"treeswap: config error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as err:
        print(f"treeswap: data error: {err}", file=sys.stderr)
        return EXIT_DATA
    except OSError as err:
        print(f"treeswap: i/o error: {err}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
