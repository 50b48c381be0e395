"""Batch graph growth without re-running discovery on every node.

A delta adds nodes and edges (never removes them).  Only nodes whose
ego-minus-ego subgraph can have changed are recomputed; their refreshed
local communities replace the stale ones recorded in the cover's
``sources`` bookkeeping, and the merge is replayed from those sources.
Replaying is cheap relative to propagation and guarantees the maintained
cover is identical to a from-scratch run at any epsilon, since the merge
consumes the same communities in the same canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CommunityCover, local_communities, merge, validate_epsilon
from .errors import DeltaError, DomainError, GraphParseError
from .graph import Graph
from .labelprop import DEFAULT_CONFIG, LpConfig


@dataclass(frozen=True)
class GraphDelta:
    """New nodes and new edges to apply as one batch (labels, not ids)."""

    new_nodes: tuple[str, ...] = ()
    new_edges: tuple[tuple[str, str], ...] = ()

    def is_empty(self) -> bool:
        return not self.new_nodes and not self.new_edges


def load_delta(path, g: Graph) -> GraphDelta:
    """Parse one batch file (same edge-list format) against the current graph.

    Endpoint labels absent from ``g`` become new nodes automatically.
    Deletion syntax (lines starting with ``-``) is rejected: this engine
    only grows graphs.  Isolated new nodes can only be added through the
    :class:`GraphDelta` API, not through files.
    """
    new_nodes: list[str] = []
    seen_new: set[str] = set()
    edges: list[tuple[str, str]] = []

    def note(label: str) -> None:
        if not g.has_node(label) and label not in seen_new:
            seen_new.add(label)
            new_nodes.append(label)

    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("-"):
                raise DeltaError(
                    f"{path}:{line_no}: deletion is not supported: {line!r}"
                )
            parts = line.split()
            if len(parts) in (2, 3):
                a, b = parts[0], parts[1]
                if a == b:
                    raise DeltaError(f"{path}:{line_no}: self-loop {a!r}")
                note(a)
                note(b)
                edges.append((a, b))
            else:
                raise GraphParseError(
                    path, line_no, f"expected two node labels, got {len(parts)} fields"
                )
    return GraphDelta(tuple(new_nodes), tuple(edges))


def apply_delta(g: Graph, delta: GraphDelta) -> Graph:
    """Return a new graph with the batch applied; ``g`` itself is untouched.

    Existing node ids are preserved (new nodes are appended), so community
    objects built against ``g`` stay valid against the result.  Edges that
    already exist are ignored.
    """
    known = {label for label in delta.new_nodes}
    for a, b in delta.new_edges:
        if a == b:
            raise DomainError(f"self-loop {a!r} in delta")
        for label in (a, b):
            if not g.has_node(label) and label not in known:
                raise DomainError(
                    f"delta edge references unknown node {label!r} "
                    "(not in the graph and not declared new)"
                )
    updated = g.copy()
    for label in delta.new_nodes:
        updated.add_node(label)
    for a, b in delta.new_edges:
        u, v = updated.add_node(a), updated.add_node(b)
        if v not in updated.neighbors(u):
            updated.add_edge(u, v)
    return updated


def _affected_in(updated: Graph, delta: GraphDelta) -> set[int]:
    touched = {updated.id_of(label) for label in delta.new_nodes}
    for a, b in delta.new_edges:
        touched.add(updated.id_of(a))
        touched.add(updated.id_of(b))
    affected = set(touched)
    for v in touched:
        affected |= updated.neighbors(v)
    return affected


def affected_nodes(g: Graph, delta: GraphDelta) -> set[int]:
    """Ids (in the updated graph) of every node whose ego view changes.

    Covers all new nodes, all endpoints of new edges, and every updated-
    graph neighbor of those endpoints.  Ids of preexisting nodes are the
    same in ``g`` and in the updated graph.
    """
    return _affected_in(apply_delta(g, delta), delta)


def demon_incremental(
    g: Graph,
    delta: GraphDelta,
    cover: CommunityCover,
    epsilon: float = 0.0,
    cfg: LpConfig = DEFAULT_CONFIG,
) -> tuple[Graph, CommunityCover]:
    """Apply a batch and return the updated graph plus maintained cover.

    ``cover`` must come from :func:`demon.core.demon` (or a previous call
    here) on ``g`` with the same epsilon and config; its ``sources`` record
    is required.  Propagation re-runs only for affected nodes.
    """
    epsilon = validate_epsilon(epsilon)
    if epsilon != cover.epsilon:
        raise DomainError(
            f"cover was built with epsilon={cover.epsilon}, asked to update with {epsilon}"
        )
    if cover.communities and not cover.sources and not cover.seeds:
        raise DomainError("cover lacks source bookkeeping; rebuild it with demon()")

    updated = apply_delta(g, delta)
    rank = updated.ranks()
    fresh = CommunityCover((), epsilon, rank)

    sources = dict(cover.sources)
    for v in _affected_in(updated, delta):
        sources[v] = tuple(
            sorted(local_communities(v, updated, cfg), key=fresh._key)
        )

    for seed in cover.seeds:
        merge(fresh, seed, epsilon)
    fresh.seeds = cover.seeds
    for v in updated.canonical_nodes():
        for cand in sources.get(v, ()):
            merge(fresh, cand, epsilon)
    fresh.sources = sources
    return updated, fresh
