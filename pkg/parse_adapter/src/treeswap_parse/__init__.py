"""Batch annotation of raw parallel text into aligned CoNLL-U files.

The adapter shells out to a pluggable parser command per language (stanza or
huspacy wrappers by default, or any command speaking the same line protocol)
and keeps the two sides of the bitext aligned, dropping pairs that fail to
parse cleanly on either side.
"""

from .adapter import (
    AdapterConfig,
    AdapterConfigError,
    ParseReport,
    ParserRunError,
    parse_corpus,
    validate_conllu,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterConfig",
    "AdapterConfigError",
    "ParseReport",
    "ParserRunError",
    "parse_corpus",
    "validate_conllu",
]
