"""The discovery engine: per-ego local communities plus containment merging.

For every node the engine extracts the ego-minus-ego subgraph, runs label
propagation on it, re-inserts the ego into each resulting group, and folds
those *local communities* into a running cover.  With ``epsilon == 0`` the
cover is exactly the set of maximal local communities (no community is a
strict subset of another); larger epsilon values merge progressively more
aggressively, with ``epsilon == 1`` even joining disjoint communities.
"""

from __future__ import annotations

import json
import multiprocessing
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .graph import Graph, ego_minus_ego, label_sort_key
from .labelprop import DEFAULT_CONFIG, LpConfig, propagate

Community = frozenset[int]


def validate_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not 0.0 <= epsilon <= 1.0:
        raise DomainError(f"epsilon must lie in [0, 1], got {epsilon}")
    return epsilon


class CommunityCover:
    """A set of communities kept merged under the epsilon-containment rule.

    ``sources`` records, per visited node, the local communities it
    contributed (in canonical order); ``seeds`` are the communities the run
    started from.  Together they are what makes incremental maintenance able
    to reproduce a from-scratch run exactly.
    """

    def __init__(
        self,
        communities: Iterable[Iterable[int]] = (),
        epsilon: float = 0.0,
        rank: Sequence[int] | None = None,
    ) -> None:
        self.epsilon = validate_epsilon(epsilon)
        self.communities: set[Community] = {frozenset(c) for c in communities}
        self.rank = rank
        self.sources: dict[int, tuple[Community, ...]] = {}
        self.seeds: tuple[Community, ...] = ()

    def _key(self, c: Community) -> tuple[int, tuple[int, ...]]:
        if self.rank is not None:
            members = tuple(sorted(self.rank[m] for m in c))
        else:
            members = tuple(sorted(c))
        return (-len(c), members)

    def canonical_list(self) -> list[Community]:
        """Communities sorted by size descending, then member order."""
        return sorted(self.communities, key=self._key)

    def copy(self) -> "CommunityCover":
        dup = CommunityCover((), self.epsilon, self.rank)
        dup.communities = set(self.communities)
        dup.sources = dict(self.sources)
        dup.seeds = self.seeds
        return dup

    def __len__(self) -> int:
        return len(self.communities)

    def __iter__(self) -> Iterator[Community]:
        return iter(self.canonical_list())

    def __contains__(self, c: Iterable[int]) -> bool:
        return frozenset(c) in self.communities

    def __repr__(self) -> str:
        return f"CommunityCover(n={len(self.communities)}, epsilon={self.epsilon})"


def eps_containment(smaller: Community, bigger: Community, epsilon: float) -> bool:
    """True when at most an ``epsilon`` fraction of ``smaller`` lies outside ``bigger``.

    The caller orients the pair: ``smaller`` must not exceed ``bigger`` in
    size.  (For equal sizes the relation is symmetric, so orientation does
    not matter.)  At ``epsilon == 0`` this is the subset test; at
    ``epsilon == 1`` it always holds.
    """
    validate_epsilon(epsilon)
    if len(smaller) > len(bigger):
        raise DomainError("eps_containment called with the pair oriented backwards")
    return len(smaller - bigger) <= epsilon * len(smaller)


def _oriented_containment(a: Community, b: Community, epsilon: float) -> bool:
    if len(a) <= len(b):
        return eps_containment(a, b, epsilon)
    return eps_containment(b, a, epsilon)


def merge(cover: CommunityCover, community: Iterable[int], epsilon: float) -> CommunityCover:
    """Fold one community into the cover under epsilon-containment; returns the cover.

    The candidate is tested against existing communities in canonical order;
    every community it ε-contains (or is ε-contained by) is removed and
    union-ed into the candidate, and passes repeat until nothing merges.
    With ``epsilon == 0`` the outcome is exactly the maximal-sets insert, so
    a cheaper direct form is used.
    """
    epsilon = validate_epsilon(epsilon)
    cand = frozenset(community)
    if not cand:
        raise DomainError("cannot merge an empty community")

    if epsilon == 0.0:
        existing = cover.communities
        if cand in existing:
            return cover
        size = len(cand)
        for other in existing:
            if size < len(other) and cand < other:
                return cover
        cover.communities = {o for o in existing if not o < cand}
        cover.communities.add(cand)
        return cover

    while True:
        merged_any = False
        for other in cover.canonical_list():
            if other not in cover.communities:
                continue
            if other == cand:
                continue
            if _oriented_containment(cand, other, epsilon):
                cover.communities.discard(other)
                cand = cand | other
                merged_any = True
        if not merged_any:
            break
    cover.communities.add(cand)
    return cover


def max_sets(sets: Iterable[Iterable[int]], rank: Sequence[int] | None = None) -> CommunityCover:
    """Reduce a collection of sets to its maximal elements.

    Duplicates collapse; any set strictly contained in another is dropped.
    Empty sets are discarded (communities are non-empty by definition).
    """
    unique = {frozenset(s) for s in sets if s}
    keep = {s for s in unique if not any(s < t for t in unique)}
    cover = CommunityCover((), 0.0, rank)
    cover.communities = keep
    return cover


def local_communities(
    v: int, g: Graph, cfg: LpConfig = DEFAULT_CONFIG
) -> set[Community]:
    """Communities seen from ``v``: propagation over its ego-minus-ego
    subgraph, with ``v`` re-inserted into each group.

    An isolated node sees nothing and yields the empty set; otherwise every
    returned community contains ``v`` and at least one neighbor.
    """
    sub = ego_minus_ego(v, g)
    return {c | {v} for c in propagate(sub, cfg)}


# -- parallel local-community computation -------------------------------------

_worker_graph: Graph | None = None
_worker_cfg: LpConfig | None = None


def _init_worker(g: Graph, cfg: LpConfig) -> None:
    global _worker_graph, _worker_cfg
    _worker_graph = g
    _worker_cfg = cfg


def _compute_chunk(chunk: list[int]) -> list[tuple[int, tuple[Community, ...]]]:
    assert _worker_graph is not None and _worker_cfg is not None
    return [
        (v, tuple(local_communities(v, _worker_graph, _worker_cfg))) for v in chunk
    ]


def iter_local_communities(
    g: Graph,
    cfg: LpConfig = DEFAULT_CONFIG,
    nodes: Sequence[int] | None = None,
    workers: int = 1,
) -> Iterator[tuple[int, tuple[Community, ...]]]:
    """Yield ``(node, local communities)`` pairs in the given node order.

    This is the parallelizable phase: each node's computation touches only
    its ego neighborhood, so with ``workers > 1`` chunks are farmed out to
    forked processes.  The yielded sequence is identical for every worker
    count; only wall-clock time changes.
    """
    node_list = list(nodes) if nodes is not None else g.canonical_nodes()
    if workers <= 1 or len(node_list) < 256:
        for v in node_list:
            yield (v, tuple(local_communities(v, g, cfg)))
        return

    chunk_size = max(64, len(node_list) // (workers * 16))
    chunks = [
        node_list[i : i + chunk_size] for i in range(0, len(node_list), chunk_size)
    ]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers, initializer=_init_worker, initargs=(g, cfg)) as pool:
        for batch in pool.imap(_compute_chunk, chunks):
            yield from batch


def demon(
    g: Graph,
    epsilon: float = 0.0,
    cfg: LpConfig = DEFAULT_CONFIG,
    initial: CommunityCover | Iterable[Iterable[int]] | None = None,
    order: Sequence[int] | None = None,
    workers: int = 1,
) -> CommunityCover:
    """Discover the overlapping community cover of ``g``.

    ``initial`` seeds the cover (it is normalized through the same merge
    rule before discovery starts).  ``order`` overrides the canonical node
    visit order; at ``epsilon == 0`` the result provably does not depend on
    it.  ``workers`` parallelizes the per-node phase without changing the
    output.
    """
    epsilon = validate_epsilon(epsilon)
    rank = g.ranks()
    cover = CommunityCover((), epsilon, rank)

    seed_sets: Iterable[Iterable[int]]
    if initial is None:
        seed_sets = ()
    elif isinstance(initial, CommunityCover):
        seed_sets = initial.communities
    else:
        seed_sets = initial
    seeds = sorted({frozenset(s) for s in seed_sets if s}, key=cover._key)
    for seed in seeds:
        merge(cover, seed, epsilon)
    cover.seeds = tuple(seeds)

    if order is not None:
        node_list = list(order)
        if sorted(node_list) != sorted(g.nodes()):
            raise DomainError("order must be a permutation of the graph's nodes")
    else:
        node_list = g.canonical_nodes()

    for v, locals_ in iter_local_communities(g, cfg, node_list, workers):
        ordered = tuple(sorted(locals_, key=cover._key))
        cover.sources[v] = ordered
        for cand in ordered:
            merge(cover, cand, epsilon)
    return cover


# -- cover serialization -------------------------------------------------------


def community_labels(c: Community, g: Graph) -> list[str]:
    """Members of ``c`` as sorted external labels."""
    return sorted((g.label_of(m) for m in c), key=label_sort_key)


def cover_to_label_sets(cover: CommunityCover, g: Graph) -> set[frozenset[str]]:
    """Label-based view of a cover, comparable across different Graph objects."""
    return {frozenset(g.label_of(m) for m in c) for c in cover.communities}


def cover_lines(cover: CommunityCover, g: Graph, min_size: int = 1) -> list[str]:
    """One line per community: sorted member labels, lines sorted canonically."""
    rows = []
    for c in cover.communities:
        if len(c) < min_size:
            continue
        rows.append(community_labels(c, g))
    rows.sort(key=lambda labels: [label_sort_key(m) for m in labels])
    return [" ".join(labels) for labels in rows]


def write_cover(cover: CommunityCover, g: Graph, path, min_size: int = 1) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for line in cover_lines(cover, g, min_size):
            handle.write(line + "\n")


def read_cover(path, g: Graph, epsilon: float = 0.0) -> CommunityCover:
    """Load a cover file written by :func:`write_cover`."""
    communities = []
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            labels = raw.split()
            if not labels or labels[0].startswith("#"):
                continue
            communities.append(frozenset(g.id_of(label) for label in labels))
    cover = CommunityCover((), epsilon, g.ranks())
    cover.communities = set(communities)
    return cover


def cover_metadata(
    cover: CommunityCover, g: Graph, cfg: LpConfig, min_size: int = 1
) -> dict:
    exported = [row.split() for row in cover_lines(cover, g, min_size)]
    return {
        "epsilon": cover.epsilon,
        "t_max": cfg.t_max,
        "node_count": g.node_count,
        "edge_count": g.edge_count,
        "community_count": len(exported),
        "min_size": min_size,
        "communities": exported,
    }


def write_cover_json(
    cover: CommunityCover, g: Graph, cfg: LpConfig, path, min_size: int = 1
) -> None:
    """Structured export with run metadata; byte-identical across runs."""
    payload = cover_metadata(cover, g, cfg, min_size)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, sort_keys=True, indent=2)
        handle.write("\n")
