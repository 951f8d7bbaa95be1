"""Acceptance suite: one test per release criterion, timed and reported.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import subprocess
import sys
import time
from collections import Counter
from contextlib import contextmanager
from pathlib import Path

import numpy as np

from acceptance_report import record_criterion
from oracles import (
    canonical_label_patterns,
    enumerate_shapes,
    mapping_oracle_ged,
    random_labeled_tree,
    recursive_levenshtein,
    shape_to_parents,
)
from test_swap import rebuild_bisentence
from treeswap.corpus import (
    BiSentence,
    Token,
    align_bitext,
    detokenize,
    make_sentence,
    read_conllu,
)
from treeswap.eligibility import (
    REASON_EDGE_COUNT,
    REASON_NO_NOUN,
    REASON_NON_CONTIGUOUS,
    REASON_POS_MISMATCH,
    EligiblePair,
    check_eligibility,
)
from treeswap.sampling import SamplerConfig, SwapPlan, build_pool, sample_plans
from treeswap.similarity import (
    LabeledTree,
    edge_mapping,
    edge_score,
    em_similarity,
    ged,
    ged_similarity,
    levenshtein,
    max_distance,
)
from treeswap.swap import splice, subtree_tokens, swap_pair

ALPHABET = ("A", "B", "C")


@contextmanager
def criterion(name, budget_seconds):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_seconds, (
            f"{name} took {elapsed:.1f}s, budget {budget_seconds}s"
        )
    except BaseException:
        record_criterion(name, False)
        raise
    record_criterion(name, True)


def sent(*rows):
    tokens = [
        Token(i, form, upos, head, deprel)
        for i, (form, upos, head, deprel) in enumerate(rows, start=1)
    ]
    return make_sentence(tokens)


def bisent(src, tgt=None):
    return BiSentence(0, src, tgt if tgt is not None else src)


def test_criterion_eligibility_suite():
    with criterion("eligibility suite (first-failure reasons)", 1.0):
        good = sent(
            ("The", "DET", 2, "det"),
            ("dog", "NOUN", 3, "nsubj"),
            ("sees", "VERB", 0, "root"),
            ("the", "DET", 5, "det"),
            ("cat", "NOUN", 3, "obj"),
        )
        assert isinstance(check_eligibility(bisent(good), "object"), EligiblePair)
        assert isinstance(check_eligibility(bisent(good), "subject"), EligiblePair)

        zero_obj = sent(
            ("The", "DET", 2, "det"),
            ("dog", "NOUN", 3, "nsubj"),
            ("sleeps", "VERB", 0, "root"),
        )
        two_obj = sent(
            ("The", "DET", 2, "det"),
            ("dog", "NOUN", 3, "nsubj"),
            ("sees", "VERB", 0, "root"),
            ("cats", "NOUN", 3, "obj"),
            ("dogs", "NOUN", 3, "obj"),
        )
        zero_nsubj = sent(
            ("See", "VERB", 0, "root"),
            ("the", "DET", 3, "det"),
            ("cat", "NOUN", 1, "obj"),
        )
        two_nsubj = sent(
            ("dogs", "NOUN", 3, "nsubj"),
            ("cats", "NOUN", 3, "nsubj"),
            ("see", "VERB", 0, "root"),
            ("birds", "NOUN", 3, "obj"),
        )
        for bad in (zero_obj, two_obj, zero_nsubj, two_nsubj):
            for swap_type in ("object", "subject"):
                result = check_eligibility(bisent(bad), swap_type)
                assert result.reason == REASON_EDGE_COUNT
                # The violation must also strike when only one side carries it.
                result = check_eligibility(bisent(good, bad), swap_type)
                assert result.reason == REASON_EDGE_COUNT

        pron_obj = sent(
            ("The", "DET", 2, "det"),
            ("dog", "NOUN", 3, "nsubj"),
            ("sees", "VERB", 0, "root"),
            ("him", "PRON", 3, "obj"),
        )
        assert (
            check_eligibility(bisent(good, pron_obj), "object").reason
            == REASON_POS_MISMATCH
        )

        pron_subj = sent(
            ("He", "PRON", 2, "nsubj"),
            ("sees", "VERB", 0, "root"),
            ("the", "DET", 4, "det"),
            ("cat", "NOUN", 2, "obj"),
        )
        assert (
            check_eligibility(bisent(pron_subj), "subject").reason == REASON_NO_NOUN
        )
        # Matching PRON roots pass the POS check, then fail the noun one.
        assert (
            check_eligibility(bisent(pron_obj), "object").reason == REASON_NO_NOUN
        )

        # Object modifier stranded beyond the adverb: members {4, 6}.
        non_contiguous = sent(
            ("The", "DET", 2, "det"),
            ("dog", "NOUN", 3, "nsubj"),
            ("sees", "VERB", 0, "root"),
            ("cats", "NOUN", 3, "obj"),
            ("today", "ADV", 3, "advmod"),
            ("spotted", "ADJ", 4, "amod"),
        )
        assert (
            check_eligibility(bisent(non_contiguous), "object").reason
            == REASON_NON_CONTIGUOUS
        )


def canonical_pair_trees(n1, p1, n2, p2, pattern):
    l1 = tuple(ALPHABET[x] for x in pattern[:n1])
    l2 = tuple(ALPHABET[x] for x in pattern[n1:])
    return LabeledTree(l1, tuple(p1)), LabeledTree(l2, tuple(p2)), l1, l2


def test_criterion_ged_oracle_equivalence():
    with criterion("tree edit distance vs brute-force mapping oracle", 60.0):
        shapes = {
            n: [shape_to_parents(s) for s in enumerate_shapes(n)] for n in range(1, 6)
        }
        flat = [(n, p) for n in range(1, 5) for p in shapes[n]]

        # Every tree pair with up to 4 nodes each, over all 3-letter label
        # assignments up to renaming (renaming invariance checked below).
        checked = 0
        for a in range(len(flat)):
            n1, p1 = flat[a]
            for b in range(a, len(flat)):
                n2, p2 = flat[b]
                for pattern in canonical_label_patterns(n1 + n2, len(ALPHABET)):
                    t1, t2, l1, l2 = canonical_pair_trees(n1, p1, n2, p2, pattern)
                    want = mapping_oracle_ged(l1, p1, l2, p2)
                    assert ged(t1, t2) == want
                    if checked % 50 == 0:
                        assert ged(t2, t1) == want
                    checked += 1
        assert checked == 21372

        # Shape-complete sweep of the 5-node boundary: every shape pair that
        # involves a 5-node tree, under fixed plus seeded label patterns.
        rng = np.random.default_rng(20240817)
        flat5 = [(n, p) for n in range(1, 6) for p in shapes[n]]
        for a in range(len(flat5)):
            n1, p1 = flat5[a]
            for b in range(a, len(flat5)):
                n2, p2 = flat5[b]
                if n1 != 5 and n2 != 5:
                    continue
                length = n1 + n2
                patterns = {
                    (0,) * length,
                    tuple(k % 3 for k in range(length)),
                }
                while len(patterns) < 60:
                    patterns.add(
                        tuple(int(rng.integers(3)) for _ in range(length))
                    )
                for pattern in sorted(patterns):
                    t1, t2, l1, l2 = canonical_pair_trees(n1, p1, n2, p2, pattern)
                    assert ged(t1, t2) == mapping_oracle_ged(l1, p1, l2, p2)

        # Renaming invariance closes the gap to arbitrary label alphabets.
        for _ in range(500):
            l1, p1 = random_labeled_tree(rng, 5, ALPHABET)
            l2, p2 = random_labeled_tree(rng, 5, ALPHABET)
            perm = dict(zip(ALPHABET, rng.permutation(ALPHABET)))
            r1 = tuple(perm[x] for x in l1)
            r2 = tuple(perm[x] for x in l2)
            assert ged(LabeledTree(l1, p1), LabeledTree(l2, p2)) == ged(
                LabeledTree(r1, p1), LabeledTree(r2, p2)
            )

        # Similarity bounds and identity over 10,000 random pairs up to 8 nodes.
        rng = np.random.default_rng(97)
        for _ in range(10_000):
            l1, p1 = random_labeled_tree(rng, 8, ALPHABET)
            l2, p2 = random_labeled_tree(rng, 8, ALPHABET)
            t1, t2 = LabeledTree(l1, p1), LabeledTree(l2, p2)
            sim = ged_similarity(t1, t2)
            assert 0.0 <= sim <= 1.0
            assert ged(t1, t2) <= max_distance(t1, t2)
            assert ged_similarity(t1, t1) == 1.0


def test_criterion_levenshtein_oracle():
    with criterion("levenshtein vs recursive oracle", 5.0):
        rng = np.random.default_rng(4242)
        for _ in range(10_000):
            a = [ALPHABET[int(x)] for x in rng.integers(3, size=int(rng.integers(0, 11)))]
            b = [ALPHABET[int(x)] for x in rng.integers(3, size=int(rng.integers(0, 11)))]
            assert levenshtein(a, b) == recursive_levenshtein(a, b)


def test_criterion_edge_mapping_invariants():
    with criterion("edge mapping invariants and Jaccard bounds", 30.0):
        rng = np.random.default_rng(31337)
        for k in range(10_000):
            l1, p1 = random_labeled_tree(rng, 8, ALPHABET)
            l2, p2 = random_labeled_tree(rng, 8, ALPHABET)
            g1, g2 = LabeledTree(l1, p1), LabeledTree(l2, p2)
            mapping = edge_mapping(g1, g2, np.random.default_rng(k))
            assert len(set(mapping.values())) == len(mapping)
            assert len(mapping) <= min(len(g1) - 1, len(g2) - 1)
            assert all(edge_score(e1, e2) >= 1 for e1, e2 in mapping.items())
            j = em_similarity(g1, g2, np.random.default_rng(k))
            assert 0.0 <= j <= 1.0
            assert em_similarity(g1, g1, np.random.default_rng(k)) == 1.0
            if k % 20 == 0:
                again = edge_mapping(g1, g2, np.random.default_rng(k))
                assert again == mapping


ACCEPT_SAMPLER = SamplerConfig(
    method="ged", threshold=0.5, ratio=3.0, swap_type="both", seed=42
)


def toy_plans(toy_corpus):
    plans = []
    for swap_type in ("object", "subject"):
        pool, _ = build_pool(toy_corpus, swap_type)
        type_plans, _ = sample_plans(pool, ACCEPT_SAMPLER, 312)
        plans.extend(type_plans)
    return plans


def test_criterion_swap_correctness(toy_corpus):
    with criterion("swap token conservation, simultaneity, involution", 5.0):
        plans = toy_plans(toy_corpus)
        assert plans
        for plan in plans:
            for receiver, donor in (
                (plan.pair_a, plan.pair_b),
                (plan.pair_b, plan.pair_a),
            ):
                for side in ("source", "target"):
                    sentence = getattr(receiver.bisentence, side)
                    subtree = (
                        receiver.src_subtree if side == "source" else receiver.tgt_subtree
                    )
                    donor_sentence = getattr(donor.bisentence, side)
                    donor_subtree = (
                        donor.src_subtree if side == "source" else donor.tgt_subtree
                    )
                    lo, hi = subtree.span
                    spliced = splice(
                        sentence, subtree.span, subtree_tokens(donor_sentence, donor_subtree)
                    )
                    # Conservation against plain list arithmetic, and alignment
                    # of each side with its own donor (simultaneity).
                    expected = (
                        [t.form for t in sentence.tokens[: lo - 1]]
                        + [
                            donor_sentence.token(i).form
                            for i in donor_subtree.members
                        ]
                        + [t.form for t in sentence.tokens[hi:]]
                    )
                    assert [t.form for t in spliced] == expected
                    assert Counter(t.form for t in spliced) == Counter(expected)

        # Identity swaps: two copies of each of the first few eligible pairs.
        pool, _ = build_pool(toy_corpus, "object")
        for base in pool[:25]:
            clone = check_eligibility(
                BiSentence(
                    base.bisentence.pair_id + 10_000,
                    base.bisentence.source,
                    base.bisentence.target,
                ),
                "object",
            )
            plan = SwapPlan(base, clone, "object", "random", None)
            first, second = swap_pair(plan)
            assert first.source_text == detokenize(base.bisentence.source.tokens)
            assert first.target_text == detokenize(base.bisentence.target.tokens)
            assert second.source_text == first.source_text

        # Swap-back involution across every sampled plan.
        for plan in plans:
            swapped_a = rebuild_bisentence(plan, "a")
            swapped_b = rebuild_bisentence(plan, "b")
            back_a = check_eligibility(swapped_a, plan.swap_type)
            back_b = check_eligibility(swapped_b, plan.swap_type)
            assert isinstance(back_a, EligiblePair)
            assert isinstance(back_b, EligiblePair)
            back_first, back_second = swap_pair(
                SwapPlan(back_a, back_b, plan.swap_type, "random", None)
            )
            original_a = plan.pair_a.bisentence
            original_b = plan.pair_b.bisentence
            assert back_first.source_text == detokenize(original_a.source.tokens)
            assert back_first.target_text == detokenize(original_a.target.tokens)
            assert back_second.source_text == detokenize(original_b.source.tokens)
            assert back_second.target_text == detokenize(original_b.target.tokens)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "treeswap", *args], capture_output=True, text=True
    )


def augment_run(tmp_path: Path, run_name: str, toy_paths):
    src, tgt = toy_paths
    run_dir = tmp_path / run_name
    run_dir.mkdir()
    result = run_cli(
        "augment",
        "--src", src,
        "--tgt", tgt,
        "--out-src", str(run_dir / "out.src"),
        "--out-tgt", str(run_dir / "out.tgt"),
        "--provenance", str(run_dir / "prov.tsv"),
        "--method", "ged",
        "--threshold", "0.5",
        "--ratio", "3",
        "--swap", "both",
        "--seed", "42",
    )
    assert result.returncode == 0, result.stderr
    report = dict(
        line.split("=", 1) for line in result.stdout.splitlines() if "=" in line
    )
    return run_dir, report


def test_criterion_pipeline_determinism(tmp_path, toy_paths):
    with criterion("pipeline determinism and report accounting", 10.0):
        blobs = []
        reports = []
        for k in range(3):
            run_dir, report = augment_run(tmp_path, f"run{k}", toy_paths)
            blobs.append(
                (run_dir / "out.src").read_bytes()
                + (run_dir / "out.tgt").read_bytes()
                + (run_dir / "prov.tsv").read_bytes()
            )
            reports.append(report)
        assert blobs[0] == blobs[1] == blobs[2]
        for report in reports:
            plans = int(report["plans"])
            emitted = int(report["augmented_emitted"])
            dropped = int(report["dedup_dropped"])
            shortfall = int(report["shortfall"])
            originals = int(report["originals"])
            assert emitted + dropped == 2 * plans
            assert emitted + shortfall + dropped == round(3 * originals)


def test_criterion_provenance_replay(tmp_path, toy_paths):
    with criterion("provenance rows reproduce emitted lines", 5.0):
        from treeswap.pipeline import replay_augmented

        run_dir, report = augment_run(tmp_path, "replay", toy_paths)
        src, tgt = toy_paths
        corpus = align_bitext(read_conllu(src), read_conllu(tgt))
        out_src = (run_dir / "out.src").read_text(encoding="utf-8").splitlines()
        out_tgt = (run_dir / "out.tgt").read_text(encoding="utf-8").splitlines()
        prov_rows = (run_dir / "prov.tsv").read_text(encoding="utf-8").splitlines()[1:]
        originals = int(report["originals"])
        assert len(prov_rows) == int(report["augmented_emitted"])
        for offset, row in enumerate(prov_rows):
            donor_a, donor_b, swap_type, _method, _sim, direction = row.split("\t")
            expected_src, expected_tgt = replay_augmented(
                corpus, int(donor_a), int(donor_b), swap_type, direction
            )
            assert out_src[originals + offset] == expected_src
            assert out_tgt[originals + offset] == expected_tgt
