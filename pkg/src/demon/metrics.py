"""Cover statistics, size distributions, and the attribute-cohesion score.

The cohesion score (CQ) asks: how much more similar, in terms of attached
qualitative attributes, are node pairs that share a community than node
pairs that merely share an edge?  It is the ratio of two means of Jaccard
coefficients -- over co-community pairs and over edges -- so 1.0 is the
"no better than random" baseline, and higher is better.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .core import CommunityCover
from .errors import UndefinedMetricError
from .graph import AttributeTable, Graph


@dataclass
class CoverStats:
    """Descriptive statistics of a community cover against its graph."""

    community_count: int
    mean_size: float
    size_histogram: dict[int, int]
    node_coverage: float
    overlap_rate: float
    empty: bool = False

    def as_pairs(self) -> list[tuple[str, str]]:
        return [
            ("community_count", str(self.community_count)),
            ("mean_size", repr(self.mean_size)),
            ("node_coverage", repr(self.node_coverage)),
            ("overlap_rate", repr(self.overlap_rate)),
            ("empty", str(self.empty).lower()),
        ]


def cover_stats(cover: CommunityCover, g: Graph) -> CoverStats:
    """Count, mean size, size histogram, coverage and overlap of a cover."""
    histogram: dict[int, int] = {}
    covered: set[int] = set()
    memberships = 0
    for c in cover.communities:
        histogram[len(c)] = histogram.get(len(c), 0) + 1
        covered.update(c)
        memberships += len(c)
    count = len(cover.communities)
    if count == 0:
        return CoverStats(0, 0.0, {}, 0.0, 0.0, empty=True)
    mean_size = memberships / count
    coverage = len(covered) / g.node_count if g.node_count else 0.0
    overlap = memberships / len(covered) if covered else 0.0
    return CoverStats(count, mean_size, histogram, coverage, overlap)


def size_distribution(cover: CommunityCover) -> list[tuple[int, int]]:
    """(size, count) rows sorted by size ascending."""
    histogram: dict[int, int] = {}
    for c in cover.communities:
        histogram[len(c)] = histogram.get(len(c), 0) + 1
    return sorted(histogram.items())


def size_distribution_export(cover: CommunityCover, path) -> None:
    """Two-column text file suitable for log-log plotting."""
    with open(path, "w", encoding="utf-8") as handle:
        for size, count in size_distribution(cover):
            handle.write(f"{size} {count}\n")


def jaccard(a: set[str] | frozenset[str], b: set[str] | frozenset[str]) -> float:
    """|a n b| / |a u b|, with the empty-vs-empty case defined as 0.

    Two nodes with no metadata carry no evidence of similarity, so they do
    not count as a perfect match.
    """
    if not a and not b:
        return 0.0
    return len(a & b) / len(a | b)


@dataclass
class CqReport:
    """Result of a cohesion computation, including sampling provenance."""

    cq: float
    pair_count: int
    sample_seed: int
    sampled: bool
    sample_size: int
    pair_jaccard_mean: float
    edge_jaccard_mean: float

    def as_pairs(self) -> list[tuple[str, str]]:
        return [
            ("cq", repr(self.cq)),
            ("pair_count", str(self.pair_count)),
            ("sampled", str(self.sampled).lower()),
            ("sample_size", str(self.sample_size)),
            ("sample_seed", str(self.sample_seed)),
            ("pair_jaccard_mean", repr(self.pair_jaccard_mean)),
            ("edge_jaccard_mean", repr(self.edge_jaccard_mean)),
        ]


def _co_community_pairs(cover: CommunityCover) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for c in cover.communities:
        members = sorted(c)
        pairs.update(combinations(members, 2))
    return pairs


def _edge_jaccard_mean(g: Graph, attrs: AttributeTable) -> float:
    total = 0.0
    edges = 0
    for u, v in g.edges():
        total += jaccard(attrs.get(u), attrs.get(v))
        edges += 1
    if edges == 0:
        raise UndefinedMetricError("graph has no edges; cohesion is undefined")
    return total / edges


def community_quality(
    cover: CommunityCover,
    g: Graph,
    attrs: AttributeTable,
    sample_limit: int | None = 400_000,
    seed: int = 0,
) -> CqReport:
    """Cohesion of a cover: mean pair Jaccard over mean edge Jaccard.

    The pair set contains every unordered node pair sharing at least one
    community, deduplicated across overlaps.  When it exceeds
    ``sample_limit`` a seeded uniform sample of that size is scored instead
    and the report says so.  Nodes absent from ``attrs`` count as having no
    attributes.
    """
    edge_mean = _edge_jaccard_mean(g, attrs)
    if edge_mean == 0.0:
        raise UndefinedMetricError(
            "all edge endpoints have disjoint attributes; cohesion is undefined"
        )

    pairs = _co_community_pairs(cover)
    pair_count = len(pairs)
    if pair_count == 0:
        raise UndefinedMetricError("cover produces no co-community pairs")

    sampled = sample_limit is not None and pair_count > sample_limit
    if sampled:
        rng = random.Random(seed)
        chosen = rng.sample(sorted(pairs), sample_limit)
    else:
        chosen = list(pairs)

    pair_mean = sum(jaccard(attrs.get(u), attrs.get(v)) for u, v in chosen) / len(
        chosen
    )
    return CqReport(
        cq=pair_mean / edge_mean,
        pair_count=pair_count,
        sample_seed=seed,
        sampled=sampled,
        sample_size=len(chosen),
        pair_jaccard_mean=pair_mean,
        edge_jaccard_mean=edge_mean,
    )


@dataclass
class SubsampledCq:
    """Average cohesion over low-overlap community subsets.

    Large covers bias the plain score toward heavily re-covered nodes, so
    each iteration greedily packs communities that share no node (visiting
    them in seeded random order) and scores only those; the mean over
    iterations is reported.
    """

    mean_cq: float
    iterations: int
    seed: int
    skipped_iterations: int = 0
    selection_rule: str = "greedy-node-packing"
    reports: list[CqReport] = field(default_factory=list)


def community_quality_subsampled(
    cover: CommunityCover,
    g: Graph,
    attrs: AttributeTable,
    iterations: int = 100,
    seed: int = 0,
    sample_limit: int | None = 400_000,
) -> SubsampledCq:
    communities = cover.canonical_list()
    rng = random.Random(seed)
    scores: list[float] = []
    reports: list[CqReport] = []
    skipped = 0
    for i in range(iterations):
        order = list(communities)
        rng.shuffle(order)
        used: set[int] = set()
        selected = []
        for c in order:
            if used.isdisjoint(c):
                selected.append(c)
                used |= c
        subset = CommunityCover((), cover.epsilon, cover.rank)
        subset.communities = set(selected)
        try:
            report = community_quality(
                subset, g, attrs, sample_limit=sample_limit, seed=seed + i
            )
        except UndefinedMetricError:
            skipped += 1
            continue
        scores.append(report.cq)
        reports.append(report)
    if not scores:
        raise UndefinedMetricError("no subsample iteration produced a defined score")
    return SubsampledCq(
        mean_cq=sum(scores) / len(scores),
        iterations=iterations,
        seed=seed,
        skipped_iterations=skipped,
        reports=reports,
    )
