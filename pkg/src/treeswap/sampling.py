"""Similarity-biased sampling of bisentence pairs for subtree swapping."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .corpus import BiSentence
from .eligibility import (
    SWAP_TYPES,
    EligiblePair,
    Rejection,
    check_eligibility,
)
from .similarity import em_similarity, ged_similarity, tree_from_subtree

METHODS = ("random", "ged", "em")

# Sub-stream tags keeping draw, tie-break and stats randomness independent.
_DRAW_TAG = {"object": 1, "subject": 2}
_EM_TAG = 3
_STATS_TAG = 4


@dataclass(frozen=True)
class SamplerConfig:
    method: str = "random"
    threshold: float = 0.5
    ratio: float = 3.0
    swap_type: str = "both"
    seed: int = 0
    max_attempts_factor: int = 200

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown sampling method {self.method!r}")
        if self.swap_type not in SWAP_TYPES and self.swap_type != "both":
            raise ValueError(f"unknown swap type {self.swap_type!r}")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError("threshold must be within [0, 1]")
        if self.ratio <= 0:
            raise ValueError("ratio must be positive")
        if self.max_attempts_factor <= 0:
            raise ValueError("max_attempts_factor must be positive")


@dataclass(frozen=True)
class SwapPlan:
    """One sampled bisentence pair; executing it yields both swap directions."""

    pair_a: EligiblePair
    pair_b: EligiblePair
    swap_type: str
    method: str
    similarity: float | None


@dataclass
class ShortfallReport:
    requested: int
    achieved: int
    attempts: int = 0

    @property
    def shortfall(self) -> int:
        """Missing augmented sentences; -1 means one-over from direction pairing."""
        return self.requested - self.achieved


@dataclass
class PoolStats:
    eligible: int = 0
    rejections: Counter = field(default_factory=Counter)


def build_pool(
    corpus: Sequence[BiSentence], swap_type: str
) -> tuple[list[EligiblePair], PoolStats]:
    """Filter a corpus down to the pairs eligible for one swap type."""
    pool: list[EligiblePair] = []
    stats = PoolStats()
    for bisentence in corpus:
        result = check_eligibility(bisentence, swap_type)
        if isinstance(result, Rejection):
            stats.rejections[result.reason] += 1
        else:
            pool.append(result)
    stats.eligible = len(pool)
    return pool, stats


def em_rng(seed: int, pair_a: int, pair_b: int) -> np.random.Generator:
    """Tie-break rng for edge mapping, stable per (seed, donor pair)."""
    return np.random.default_rng(np.random.SeedSequence([seed, _EM_TAG, pair_a, pair_b]))


def stats_rng(seed: int, swap_type: str) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence([seed, _STATS_TAG, _DRAW_TAG[swap_type]])
    )


def pair_similarity(a: EligiblePair, b: EligiblePair, method: str, seed: int) -> float:
    """Similarity between the source-side subtrees of two eligible pairs."""
    t1 = tree_from_subtree(a.bisentence.source, a.src_subtree)
    t2 = tree_from_subtree(b.bisentence.source, b.src_subtree)
    if method == "ged":
        return ged_similarity(t1, t2)
    if method == "em":
        rng = em_rng(seed, a.bisentence.pair_id, b.bisentence.pair_id)
        return em_similarity(t1, t2, rng)
    raise ValueError(f"no similarity defined for method {method!r}")


def sample_plans(
    pool: Sequence[EligiblePair], cfg: SamplerConfig, target_count: int
) -> tuple[list[SwapPlan], ShortfallReport]:
    """Draw unordered pool pairs until the target is covered or attempts run out.

    Each accepted draw becomes one plan (two augmented sentences). Draws are
    uniform without replacement over unordered pairs; with method ged/em a
    draw is kept only when the source-subtree similarity reaches the
    threshold. Pools smaller than two simply report a full shortfall.
    """
    if target_count < 0:
        raise ValueError("target_count must be non-negative")
    swap_type = pool[0].swap_type if pool else cfg.swap_type
    plans: list[SwapPlan] = []
    report = ShortfallReport(requested=target_count, achieved=0)
    n = len(pool)
    if n < 2 or target_count == 0:
        return plans, report

    rng = np.random.default_rng(
        np.random.SeedSequence([cfg.seed, _DRAW_TAG[swap_type]])
    )
    budget = cfg.max_attempts_factor * target_count
    seen: set[tuple[int, int]] = set()
    while 2 * len(plans) < target_count and report.attempts < budget:
        report.attempts += 1
        i = int(rng.integers(n))
        j = int(rng.integers(n))
        if i == j:
            continue
        a, b = pool[min(i, j)], pool[max(i, j)]
        key = (a.bisentence.pair_id, b.bisentence.pair_id)
        if key in seen:
            continue
        seen.add(key)
        similarity = None
        if cfg.method != "random":
            similarity = pair_similarity(a, b, cfg.method, cfg.seed)
            if similarity < cfg.threshold:
                continue
        plans.append(
            SwapPlan(
                pair_a=a,
                pair_b=b,
                swap_type=swap_type,
                method=cfg.method,
                similarity=similarity,
            )
        )
    report.achieved = 2 * len(plans)
    return plans, report


def split_target(target_count: int) -> dict[str, int]:
    """Per-type targets for swap_type 'both'; object receives the remainder."""
    subject = target_count // 2
    return {"object": target_count - subject, "subject": subject}
