import dataclasses
import sys

import pytest

from treeswap_parse.adapter import (
    AdapterConfig,
    AdapterConfigError,
    ParserRunError,
    default_parser_command,
    parse_corpus,
    validate_conllu,
)


def make_config(tmp_path, rule_commands, en_lines, de_lines, **kwargs):
    src_txt = tmp_path / "in.en.txt"
    tgt_txt = tmp_path / "in.de.txt"
    src_txt.write_text("\n".join(en_lines) + "\n", encoding="utf-8")
    tgt_txt.write_text("\n".join(de_lines) + "\n", encoding="utf-8")
    en_cmd, de_cmd = rule_commands
    return AdapterConfig(
        src_lang="en",
        tgt_lang="de",
        src_txt=str(src_txt),
        tgt_txt=str(tgt_txt),
        src_conllu=str(tmp_path / "out.en.conllu"),
        tgt_conllu=str(tmp_path / "out.de.conllu"),
        src_parser=en_cmd,
        tgt_parser=de_cmd,
        **kwargs,
    )


def count_sentences(path):
    blocks = [
        b for b in open(path, encoding="utf-8").read().split("\n\n") if b.strip()
    ]
    return len(blocks)


def test_three_lines_give_three_blocks_each_side(tmp_path, rule_commands):
    cfg = make_config(
        tmp_path,
        rule_commands,
        ["The dog sees the cat .", "Anna reads the book .", "He buys the bread ."],
        ["Der Hund sieht die Katze .", "Anna liest das Buch .", "Er kauft das Brot ."],
    )
    report = parse_corpus(cfg)
    assert report.kept == 3
    assert report.dropped == []
    assert count_sentences(cfg.src_conllu) == 3
    assert count_sentences(cfg.tgt_conllu) == 3


def test_mismatched_line_counts_fail_before_parsing(tmp_path, rule_commands):
    cfg = make_config(
        tmp_path,
        rule_commands,
        ["a", "b", "c"],
        ["x", "y"],
    )
    with pytest.raises(AdapterConfigError, match="3 vs 2"):
        parse_corpus(cfg)


def test_split_line_dropped_on_both_sides(tmp_path, rule_commands):
    cfg = make_config(
        tmp_path,
        rule_commands,
        ["The dog sees the cat .", "He was here . And left ."],
        ["Der Hund sieht die Katze .", "Er war hier ."],
    )
    report = parse_corpus(cfg)
    assert report.kept == 1
    assert len(report.dropped) == 1
    index, reason = report.dropped[0]
    assert index == 1
    assert "split" in reason
    assert count_sentences(cfg.src_conllu) == 1
    assert count_sentences(cfg.tgt_conllu) == 1


def test_unparseable_line_dropped_and_logged(tmp_path, rule_commands):
    cfg = make_config(
        tmp_path,
        rule_commands,
        ["The dog sees the cat .", ""],
        ["Der Hund sieht die Katze .", "Er war hier ."],
    )
    report = parse_corpus(cfg)
    assert report.kept == 1
    assert report.dropped[0][0] == 1
    assert "failed" in report.dropped[0][1]


def test_alignment_preserved_after_drops(tmp_path, rule_commands):
    en = ["The dog sees the cat .", "He was here . And left .", "Anna buys the car ."]
    de = ["Der Hund sieht die Katze .", "Er war hier .", "Anna kauft das Auto ."]
    cfg = make_config(tmp_path, rule_commands, en, de)
    parse_corpus(cfg)
    src_ids = [
        line.split("=")[1].strip()
        for line in open(cfg.src_conllu, encoding="utf-8")
        if line.startswith("# sent_id")
    ]
    tgt_ids = [
        line.split("=")[1].strip()
        for line in open(cfg.tgt_conllu, encoding="utf-8")
        if line.startswith("# sent_id")
    ]
    assert src_ids == tgt_ids == ["line-0", "line-2"]


def test_broken_parser_command_raises(tmp_path, rule_commands):
    cfg = make_config(
        tmp_path,
        rule_commands,
        ["hello"],
        ["hallo"],
    )
    bad = dataclasses.replace(
        cfg, src_parser=(sys.executable, "-c", "import sys; sys.exit(9)")
    )
    with pytest.raises(ParserRunError, match="exited with 9"):
        parse_corpus(bad)


def test_default_command_unsupported_language():
    with pytest.raises(AdapterConfigError, match="unsupported language"):
        default_parser_command("tlh")


def test_default_command_routes_hungarian_to_huspacy():
    assert "huspacy_runner" in " ".join(default_parser_command("hu"))
    assert "stanza_runner" in " ".join(default_parser_command("de"))


class TestValidateConllu:
    def test_clean_file(self, tmp_path, rule_commands):
        cfg = make_config(
            tmp_path, rule_commands, ["The dog sees the cat ."], ["Der Hund sieht die Katze ."]
        )
        parse_corpus(cfg)
        assert validate_conllu(cfg.src_conllu) == []
        assert validate_conllu(cfg.tgt_conllu) == []

    def test_two_roots_named(self, tmp_path):
        path = tmp_path / "bad.conllu"
        path.write_text(
            "# sent_id = broken\n"
            "1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n"
            "2\tb\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\n",
            encoding="utf-8",
        )
        violations = validate_conllu(str(path))
        assert len(violations) == 1
        assert "broken" in violations[0]
        assert "root" in violations[0]

    def test_empty_file_is_clean(self, tmp_path):
        path = tmp_path / "empty.conllu"
        path.write_text("", encoding="utf-8")
        assert validate_conllu(str(path)) == []
