"""Core adapter: run parser commands over batches and keep bitext aligned.

Runner protocol
---------------
A parser runner is any command that reads UTF-8 text lines on stdin and
writes CoNLL-U blocks to stdout. Every block starts with a comment
``# input_line = <k>`` naming the 0-based position of the line *within the
batch* it came from; blocks are separated by blank lines. A line that the
runner could not parse yields a block with the comment but no token rows.
A line split into several sentences yields several blocks with the same k.
"""

from __future__ import annotations

import logging
import subprocess
import sys
from dataclasses import dataclass, field

log = logging.getLogger("treeswap_parse")

# Languages the default stanza wrapper is expected to have models for.
STANZA_LANGUAGES = frozenset(
    {"ar", "de", "en", "es", "fr", "he", "it", "nl", "pt", "ru", "vi", "zh"}
)


class AdapterConfigError(ValueError):
    """Bad adapter configuration: unequal corpora, unsupported language."""


class ParserRunError(RuntimeError):
    """The external parser command failed outright."""


def default_parser_command(lang: str) -> list[str]:
    """Default wrapper per language: huspacy for Hungarian, stanza elsewhere."""
    if lang == "hu":
        return [sys.executable, "-m", "treeswap_parse.huspacy_runner"]
    if lang in STANZA_LANGUAGES:
        return [sys.executable, "-m", "treeswap_parse.stanza_runner", "--lang", lang]
    raise AdapterConfigError(
        f"unsupported language {lang!r}: pass an explicit parser command"
    )


@dataclass(frozen=True)
class AdapterConfig:
    src_lang: str
    tgt_lang: str
    src_txt: str
    tgt_txt: str
    src_conllu: str
    tgt_conllu: str
    batch_size: int = 64
    src_parser: tuple[str, ...] | None = None
    tgt_parser: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.batch_size < 1:
            raise AdapterConfigError("batch_size must be positive")
        if not self.src_lang or not self.tgt_lang:
            raise AdapterConfigError("both language codes are required")

    def parser_for(self, side: str) -> list[str]:
        override = self.src_parser if side == "src" else self.tgt_parser
        if override is not None:
            return list(override)
        lang = self.src_lang if side == "src" else self.tgt_lang
        return default_parser_command(lang)


@dataclass
class ParseReport:
    kept: int = 0
    dropped: list[tuple[int, str]] = field(default_factory=list)


def _run_batch(command: list[str], lines: list[str]) -> list[list[list[str]]]:
    """Run one batch; returns per-line lists of blocks (token rows only)."""
    payload = "\n".join(lines) + "\n"
    try:
        proc = subprocess.run(
            command, input=payload, capture_output=True, text=True, check=False
        )
    except OSError as err:
        raise ParserRunError(f"cannot launch parser {command!r}: {err}") from err
    if proc.returncode != 0:
        raise ParserRunError(
            f"parser {command!r} exited with {proc.returncode}: "
            f"{proc.stderr.strip()[:500]}"
        )
    per_line: list[list[list[str]]] = [[] for _ in lines]
    current_rows: list[str] = []
    current_line: int | None = None

    def flush() -> None:
        nonlocal current_rows, current_line
        if current_line is not None:
            if not 0 <= current_line < len(lines):
                raise ParserRunError(
                    f"parser {command!r} reported line {current_line} "
                    f"outside batch of {len(lines)}"
                )
            per_line[current_line].append(current_rows)
        current_rows = []
        current_line = None

    for raw in proc.stdout.splitlines():
        line = raw.rstrip()
        if not line:
            flush()
        elif line.startswith("#"):
            key, _, value = line[1:].partition("=")
            if key.strip() == "input_line":
                flush()
                current_line = int(value.strip())
        else:
            if current_line is None:
                raise ParserRunError(
                    f"parser {command!r} emitted rows before any input_line marker"
                )
            current_rows.append(line)
    flush()
    return per_line


def _parse_side(cfg: AdapterConfig, side: str, lines: list[str]) -> list[list[list[str]]]:
    command = cfg.parser_for(side)
    blocks: list[list[list[str]]] = []
    for start in range(0, len(lines), cfg.batch_size):
        batch = lines[start : start + cfg.batch_size]
        blocks.extend(_run_batch(command, batch))
    return blocks


def _block_violations(rows: list[str], label: str) -> list[str]:
    """Structural checks on one block of token rows; labels name the sentence."""
    problems: list[str] = []
    indices: list[int] = []
    heads: dict[int, int] = {}
    for row in rows:
        fields = row.split("\t")
        if len(fields) != 10:
            problems.append(f"{label}: expected 10 columns, got {len(fields)}")
            continue
        token_id = fields[0]
        if "-" in token_id or "." in token_id:
            continue
        if not token_id.isdigit() or not fields[6].lstrip("-").isdigit():
            problems.append(f"{label}: non-integer id or head")
            continue
        indices.append(int(token_id))
        heads[int(token_id)] = int(fields[6])
    if problems:
        return problems
    if not indices:
        return [f"{label}: no token rows"]
    n = len(indices)
    if indices != list(range(1, n + 1)):
        problems.append(f"{label}: token ids not consecutive from 1")
        return problems
    roots = [i for i in indices if heads[i] == 0]
    if len(roots) != 1:
        problems.append(f"{label}: expected exactly one root, found {len(roots)}")
        return problems
    for i in indices:
        if heads[i] == i or heads[i] > n or heads[i] < 0:
            problems.append(f"{label}: head of token {i} out of range")
            return problems
    for i in indices:
        current, hops = i, 0
        while current != roots[0]:
            current = heads[current]
            hops += 1
            if hops > n:
                return [f"{label}: cycle involving token {i}"]
    return []


def parse_corpus(cfg: AdapterConfig) -> ParseReport:
    """Parse both text files into aligned CoNLL-U, dropping unusable pairs.

    A pair is dropped (on both sides, logged with its index) when either
    side fails to parse, is split into several sentences, or produces a
    structurally invalid tree.
    """
    with open(cfg.src_txt, encoding="utf-8") as handle:
        src_lines = handle.read().splitlines()
    with open(cfg.tgt_txt, encoding="utf-8") as handle:
        tgt_lines = handle.read().splitlines()
    if len(src_lines) != len(tgt_lines):
        raise AdapterConfigError(
            f"line count mismatch: {len(src_lines)} vs {len(tgt_lines)}"
        )

    src_blocks = _parse_side(cfg, "src", src_lines)
    tgt_blocks = _parse_side(cfg, "tgt", tgt_lines)

    report = ParseReport()
    kept_indices: list[int] = []
    for i in range(len(src_lines)):
        reason = None
        for side_name, blocks in (("src", src_blocks[i]), ("tgt", tgt_blocks[i])):
            if len(blocks) == 0 or (len(blocks) == 1 and not blocks[0]):
                reason = f"{side_name}: parse failed"
            elif len(blocks) > 1:
                reason = f"{side_name}: split into {len(blocks)} sentences"
            else:
                bad = _block_violations(blocks[0], side_name)
                if bad:
                    reason = bad[0]
            if reason:
                break
        if reason:
            report.dropped.append((i, reason))
            log.warning("dropping line %d: %s", i, reason)
        else:
            kept_indices.append(i)
    report.kept = len(kept_indices)

    for path, blocks in ((cfg.src_conllu, src_blocks), (cfg.tgt_conllu, tgt_blocks)):
        with open(path, "w", encoding="utf-8") as handle:
            for i in kept_indices:
                handle.write(f"# sent_id = line-{i}\n")
                handle.write("\n".join(blocks[i][0]))
                handle.write("\n\n")
    return report


def validate_conllu(path: str) -> list[str]:
    """Structural check of a CoNLL-U file without loading the full engine.

    Returns a list of violations; an empty list means the file is clean.
    """
    violations: list[str] = []
    rows: list[str] = []
    sent_id: str | None = None
    ordinal = 0

    def flush() -> None:
        nonlocal rows, sent_id, ordinal
        if rows:
            ordinal += 1
            label = sent_id if sent_id is not None else f"sentence {ordinal}"
            violations.extend(_block_violations(rows, label))
        rows = []
        sent_id = None

    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.rstrip("\n")
            if not line.strip():
                flush()
            elif line.startswith("#"):
                key, _, value = line[1:].partition("=")
                if key.strip() == "sent_id":
                    sent_id = value.strip()
            else:
                rows.append(line)
    flush()
    return violations
