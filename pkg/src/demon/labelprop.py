"""Deterministic label propagation over a subgraph, with overlap extraction.

The classic algorithm lets every node repeatedly adopt the label carried by
the majority of its neighbors, with random visiting order and random tie
breaks.  Determinism is non-negotiable here, so both sources of randomness
are replaced:

* nodes are visited asynchronously in canonical (label-sorted) order;
* frequency ties resolve to the smallest label in that same order.

A node votes over its neighbors' labels only, never its own.  The loop
stops once every node's label is among the maximal-frequency labels of its
neighborhood, or after ``t_max`` rounds (oscillating states are accepted
as-is at that point rather than treated as an error).

At convergence a node belongs to the community of *every* label that
reaches the maximal frequency among its neighbors, which is what produces
overlapping memberships on ties.  Nodes with no neighbors form singletons.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .graph import Subgraph


@dataclass(frozen=True)
class LpConfig:
    """Propagation knobs.  ``t_max`` bounds the number of rounds."""

    t_max: int = 100

    def __post_init__(self) -> None:
        if self.t_max < 1:
            raise ValueError("t_max must be >= 1")


DEFAULT_CONFIG = LpConfig()


@dataclass
class LabelState:
    """Per-node label assignment at some iteration.

    Labels are drawn from the node-id space: at iteration 0 every node
    carries its own id as its label.
    """

    labels: dict[int, int] = field(default_factory=dict)
    iteration: int = 0

    @classmethod
    def initial(cls, sub: Subgraph) -> "LabelState":
        return cls(labels={v: v for v in sub.nodes}, iteration=0)


def frequency_vote(v: int, state: LabelState, sub: Subgraph) -> int:
    """Most frequent label among ``v``'s neighbors; ties -> smallest label.

    "Smallest" means smallest canonical rank of the node whose id the label
    is, so the result does not depend on id assignment order.  Isolated
    nodes have no vote and raise; callers turn them into singletons.
    """
    nbrs = sub.neighbors(v)
    if not nbrs:
        raise DomainError(f"node {v} has no neighbors in the subgraph")
    counts: dict[int, int] = {}
    for u in nbrs:
        lab = state.labels[u]
        counts[lab] = counts.get(lab, 0) + 1
    ranks = sub.parent.ranks()
    best = max(counts.values())
    return min((lab for lab, c in counts.items() if c == best), key=ranks.__getitem__)


def propagate(sub: Subgraph, cfg: LpConfig = DEFAULT_CONFIG) -> set[frozenset[int]]:
    """Run deterministic label propagation and group nodes into communities.

    Returns a set of communities over the subgraph's nodes (parent ids).
    Every node appears in at least one community; communities may overlap
    but never span two connected components.  An empty subgraph yields the
    empty set.
    """
    order = sub.nodes  # already canonical
    k = len(order)
    if k == 0:
        return set()

    # Work on local indices 0..k-1; index order equals canonical rank order,
    # so "smallest label" is just the smallest integer.
    pos = {node: i for i, node in enumerate(order)}
    nbrs: list[list[int]] = [[pos[w] for w in sub.adj[node]] for node in order]
    labels = list(range(k))

    for _ in range(cfg.t_max):
        _run_round(labels, nbrs)
        if _is_settled(labels, nbrs):
            break

    return _extract_communities(labels, nbrs, order)


def _run_round(labels: list[int], nbrs: list[list[int]]) -> None:
    """One asynchronous pass in index order, min-label tie break."""
    for i, nn in enumerate(nbrs):
        if not nn:
            continue
        counts: dict[int, int] = {}
        for j in nn:
            lab = labels[j]
            counts[lab] = counts.get(lab, 0) + 1
        best = -1
        winner = -1
        for lab, c in counts.items():
            if c > best or (c == best and lab < winner):
                best = c
                winner = lab
        labels[i] = winner


def _is_settled(labels: list[int], nbrs: list[list[int]]) -> bool:
    """True when every node's label has maximal frequency among neighbors."""
    for i, nn in enumerate(nbrs):
        if not nn:
            continue
        counts: dict[int, int] = {}
        for j in nn:
            lab = labels[j]
            counts[lab] = counts.get(lab, 0) + 1
        if counts.get(labels[i], 0) != max(counts.values()):
            return False
    return True


def _extract_communities(
    labels: list[int], nbrs: list[list[int]], order: tuple[int, ...]
) -> set[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    singletons: set[frozenset[int]] = set()
    for i, nn in enumerate(nbrs):
        node = order[i]
        if not nn:
            singletons.add(frozenset((node,)))
            continue
        counts: dict[int, int] = {}
        for j in nn:
            lab = labels[j]
            counts[lab] = counts.get(lab, 0) + 1
        best = max(counts.values())
        for lab, c in counts.items():
            if c == best:
                groups.setdefault(lab, set()).add(node)
    communities = {frozenset(members) for members in groups.values()}
    return communities | singletons
