"""End-to-end orchestration: ingestion, sampling, swapping, output, reports."""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field

from .corpus import (
    AlignmentError,
    BiSentence,
    align_bitext,
    detokenize,
    read_conllu,
    write_output,
)
from .eligibility import (
    NOMINAL_TAGS,
    OBJECT,
    RELATION_FOR_SWAP,
    SUBJECT,
    Rejection,
    check_eligibility,
    extract_subtree,
    find_unique_edge,
)
from .sampling import (
    SamplerConfig,
    SwapPlan,
    build_pool,
    em_rng,
    pair_similarity,
    sample_plans,
    split_target,
    stats_rng,
)
from .similarity import em_similarity, ged_similarity, tree_from_subtree
from .swap import AugmentedPair, swap_pair

HISTOGRAM_BINS = 10
DEFAULT_HISTOGRAM_DRAWS = 10_000


class ConfigError(ValueError):
    """An invalid run configuration (paths, parameter combinations)."""


class IneligibleSentenceError(ValueError):
    """A sentence fed to the scorer fails a swap constraint."""


@dataclass(frozen=True)
class RunConfig:
    src_conllu: str
    tgt_conllu: str
    out_src: str | None = None
    out_tgt: str | None = None
    out_provenance: str | None = None
    sampler: SamplerConfig = SamplerConfig()
    include_originals: bool = True
    stats_path: str | None = None

    def __post_init__(self) -> None:
        inputs = {self.src_conllu, self.tgt_conllu}
        outputs = {
            p
            for p in (self.out_src, self.out_tgt, self.out_provenance, self.stats_path)
            if p is not None
        }
        if inputs & outputs:
            raise ConfigError("input paths must be distinct from output paths")


@dataclass
class RunReport:
    originals: int = 0
    eligible_object: int = 0
    eligible_subject: int = 0
    rejections: Counter = field(default_factory=Counter)
    plans: int = 0
    augmented_emitted: int = 0
    dedup_dropped: int = 0
    shortfall: int = 0
    wall_time: float = 0.0
    histograms: dict[str, list[int]] | None = None

    def to_flat_dict(self) -> dict[str, object]:
        """Flatten for the machine-readable stats document."""
        flat: dict[str, object] = {
            "originals": self.originals,
            "eligible_object": self.eligible_object,
            "eligible_subject": self.eligible_subject,
            "plans": self.plans,
            "augmented_emitted": self.augmented_emitted,
            "dedup_dropped": self.dedup_dropped,
            "shortfall": self.shortfall,
            "wall_time": round(self.wall_time, 6),
        }
        for reason in sorted(self.rejections):
            flat[f"rejections.{reason}"] = self.rejections[reason]
        if self.histograms is not None:
            for swap_type in sorted(self.histograms):
                buckets = self.histograms[swap_type]
                for b, count in enumerate(buckets):
                    lo = b / HISTOGRAM_BINS
                    hi = (b + 1) / HISTOGRAM_BINS
                    flat[f"histogram.{swap_type}.{lo:.1f}-{hi:.1f}"] = count
        return flat


def _active_swap_types(cfg: SamplerConfig) -> list[str]:
    if cfg.swap_type == "both":
        return [OBJECT, SUBJECT]
    return [cfg.swap_type]


def _load_corpus(cfg: RunConfig) -> list[BiSentence]:
    src = read_conllu(cfg.src_conllu)
    tgt = read_conllu(cfg.tgt_conllu)
    try:
        return align_bitext(src, tgt)
    except AlignmentError as err:
        raise AlignmentError(f"{cfg.src_conllu} / {cfg.tgt_conllu}: {err}") from err


def _targets(cfg: SamplerConfig, total: int) -> dict[str, int]:
    if cfg.swap_type == "both":
        return split_target(total)
    return {cfg.swap_type: total}


def run_augment(cfg: RunConfig) -> RunReport:
    """Run the full augmentation pipeline and write bitext plus reports."""
    if cfg.out_src is None or cfg.out_tgt is None:
        raise ConfigError("augment requires both output paths")
    start = time.perf_counter()
    corpus = _load_corpus(cfg)
    report = RunReport(originals=len(corpus))
    target_total = round(cfg.sampler.ratio * len(corpus))
    targets = _targets(cfg.sampler, target_total)

    plans: list[SwapPlan] = []
    for swap_type in _active_swap_types(cfg.sampler):
        pool, pool_stats = build_pool(corpus, swap_type)
        report.rejections.update(pool_stats.rejections)
        if swap_type == OBJECT:
            report.eligible_object = pool_stats.eligible
        else:
            report.eligible_subject = pool_stats.eligible
        type_plans, shortfall = sample_plans(pool, cfg.sampler, targets[swap_type])
        plans.extend(type_plans)
        report.shortfall += shortfall.shortfall
    report.plans = len(plans)

    seen: set[tuple[str, str]] = {
        (detokenize(pair.source.tokens), detokenize(pair.target.tokens))
        for pair in corpus
    }
    augmented: list[AugmentedPair] = []
    for plan in plans:
        for candidate in swap_pair(plan):
            key = (candidate.source_text, candidate.target_text)
            if key in seen:
                report.dedup_dropped += 1
            else:
                seen.add(key)
                augmented.append(candidate)
    report.augmented_emitted = len(augmented)

    originals = corpus if cfg.include_originals else []
    write_output(
        originals, augmented, cfg.out_src, cfg.out_tgt, cfg.out_provenance
    )
    report.wall_time = time.perf_counter() - start
    if cfg.stats_path is not None:
        _write_stats(report, cfg.stats_path)
    return report


def _similarity_histogram(
    pool, cfg: SamplerConfig, swap_type: str, draws: int
) -> list[int]:
    buckets = [0] * HISTOGRAM_BINS
    n = len(pool)
    if n < 2:
        return buckets
    rng = stats_rng(cfg.seed, swap_type)
    done = 0
    while done < draws:
        i = int(rng.integers(n))
        j = int(rng.integers(n))
        if i == j:
            continue
        a, b = pool[min(i, j)], pool[max(i, j)]
        sim = pair_similarity(a, b, cfg.method, cfg.seed)
        bucket = min(int(sim * HISTOGRAM_BINS), HISTOGRAM_BINS - 1)
        buckets[bucket] += 1
        done += 1
    return buckets


def run_stats(cfg: RunConfig, histogram_draws: int = DEFAULT_HISTOGRAM_DRAWS) -> RunReport:
    """Analyze eligibility and similarity spread without writing bitext."""
    start = time.perf_counter()
    corpus = _load_corpus(cfg)
    report = RunReport(originals=len(corpus))
    if cfg.sampler.method != "random":
        report.histograms = {}
    for swap_type in _active_swap_types(cfg.sampler):
        pool, pool_stats = build_pool(corpus, swap_type)
        report.rejections.update(pool_stats.rejections)
        if swap_type == OBJECT:
            report.eligible_object = pool_stats.eligible
        else:
            report.eligible_subject = pool_stats.eligible
        if report.histograms is not None:
            report.histograms[swap_type] = _similarity_histogram(
                pool, cfg.sampler, swap_type, histogram_draws
            )
    report.wall_time = time.perf_counter() - start
    if cfg.stats_path is not None:
        _write_stats(report, cfg.stats_path)
    return report


def _write_stats(report: RunReport, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(report.to_flat_dict(), handle, indent=2, sort_keys=True)
            handle.write("\n")
    except OSError as err:
        raise OSError(f"cannot write stats file: {err}") from err


def _score_subtree(path: str, swap_type: str):
    sentences = read_conllu(path)
    if not sentences:
        raise IneligibleSentenceError(f"{path}: file contains no sentences")
    sentence = sentences[0]
    for relation in ("obj", "nsubj"):
        if find_unique_edge(sentence, relation) is None:
            raise IneligibleSentenceError(
                f"{path}: sentence must contain exactly one {relation} edge"
            )
    dep_index = find_unique_edge(sentence, RELATION_FOR_SWAP[swap_type])
    assert dep_index is not None
    if dep_index == sentence.root_index:
        raise IneligibleSentenceError(f"{path}: swap edge points at the sentence root")
    subtree = extract_subtree(sentence, dep_index)
    if subtree is None:
        raise IneligibleSentenceError(f"{path}: swap subtree is not contiguous")
    if not any(sentence.token(i).upos in NOMINAL_TAGS for i in subtree.members):
        raise IneligibleSentenceError(
            f"{path}: swap subtree contains no noun or proper noun"
        )
    return tree_from_subtree(sentence, subtree)


def score_pair(
    path_a: str, path_b: str, swap_type: str, method: str, seed: int = 0
) -> float:
    """Similarity between the first sentences' swap subtrees of two files."""
    if method not in ("ged", "em"):
        raise ConfigError("score requires method ged or em")
    t1 = _score_subtree(path_a, swap_type)
    t2 = _score_subtree(path_b, swap_type)
    if method == "ged":
        return ged_similarity(t1, t2)
    return em_similarity(t1, t2, em_rng(seed, 0, 1))


def replay_augmented(
    corpus: list[BiSentence],
    donor_a: int,
    donor_b: int,
    swap_type: str,
    direction: str,
) -> tuple[str, str]:
    """Recompute one augmented pair from its provenance row.

    Returns the (source, target) texts the pipeline must have emitted for
    this row; used to audit written output.
    """
    eligible = {}
    for pair_id in (donor_a, donor_b):
        result = check_eligibility(corpus[pair_id], swap_type)
        if isinstance(result, Rejection):
            raise IneligibleSentenceError(
                f"pair {pair_id} no longer eligible: {result.reason}"
            )
        eligible[pair_id] = result
    plan = SwapPlan(
        pair_a=eligible[donor_a],
        pair_b=eligible[donor_b],
        swap_type=swap_type,
        method="random",
        similarity=None,
    )
    first, second = swap_pair(plan)
    chosen = first if direction == "a_receives_b" else second
    return chosen.source_text, chosen.target_text
