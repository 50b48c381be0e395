"""Undirected simple graphs, file ingestion, and the two ego subgraph operators.

Nodes carry external string labels and are stored under dense integer ids
assigned in first-seen order.  Every deterministic ordering in this package
(visit order, tie-breaking, exports) is derived from the *canonical rank* of
a node, i.e. its position in the label-sorted node list, so the order in
which an input file lists its edges never influences any result.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DomainError, GraphParseError

logger = logging.getLogger(__name__)


def label_sort_key(label: str) -> tuple[int, int, str]:
    """Canonical ordering key for node labels.

    All-digit labels sort numerically ("2" before "10"), everything else
    lexicographically after them.  The raw label is kept as a final
    component so distinct labels never compare equal.
    """
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


@dataclass
class LoadReport:
    """What an edge-list ingestion kept and dropped."""

    lines: int = 0
    edges_added: int = 0
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0
    extra_fields_ignored: int = 0

    def summary(self) -> str:
        return (
            f"{self.lines} lines, {self.edges_added} edges added, "
            f"{self.self_loops_dropped} self-loops dropped, "
            f"{self.duplicates_dropped} duplicates dropped, "
            f"{self.extra_fields_ignored} extra fields ignored"
        )


class Graph:
    """Undirected simple graph over dense integer node ids.

    Invariants maintained by construction: the adjacency is symmetric,
    there are no self-loops and no parallel edges, and the label/id mapping
    is a bijection.  Instances are treated as immutable once built; nothing
    in this package mutates a graph after it leaves its constructor, which
    makes concurrent read access safe.
    """

    def __init__(self) -> None:
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        self._adj: list[set[int]] = []
        self._edge_count = 0
        self._ranks: list[int] | None = None
        self.load_report: LoadReport | None = None

    # -- construction -----------------------------------------------------

    def add_node(self, label: str) -> int:
        """Return the id for ``label``, creating the node if new."""
        node = self._ids.get(label)
        if node is None:
            node = len(self._labels)
            self._ids[label] = node
            self._labels.append(label)
            self._adj.append(set())
            self._ranks = None
        return node

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge (u, v); returns False if it already exists.

        Self-loops are rejected because the graph is simple.
        """
        if u == v:
            raise DomainError(f"self-loop on node {self._labels[u]!r}")
        if v in self._adj[u]:
            return False
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1
        return True

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[str, str]], nodes: Iterable[str] = ()
    ) -> "Graph":
        """Build a graph from labeled edges plus optional isolated nodes.

        Duplicate edges and self-loops are dropped silently, matching the
        file loader's behaviour.
        """
        g = cls()
        for label in nodes:
            g.add_node(label)
        for a, b in edges:
            u, v = g.add_node(a), g.add_node(b)
            if u != v:
                g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        g = Graph()
        g._labels = list(self._labels)
        g._ids = dict(self._ids)
        g._adj = [set(s) for s in self._adj]
        g._edge_count = self._edge_count
        return g

    # -- inspection ---------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def nodes(self) -> range:
        return range(len(self._labels))

    def has_node(self, label: str) -> bool:
        return label in self._ids

    def id_of(self, label: str) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise DomainError(f"unknown node label {label!r}") from None

    def label_of(self, v: int) -> str:
        return self._labels[v]

    def neighbors(self, v: int) -> set[int]:
        """Adjacency set of ``v``.  Callers must not mutate it."""
        self._check_node(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges once, as (u, v) with u < v by id."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def ranks(self) -> list[int]:
        """node id -> canonical rank (position in label-sorted order)."""
        if self._ranks is None:
            order = sorted(self.nodes(), key=lambda v: label_sort_key(self._labels[v]))
            ranks = [0] * len(order)
            for pos, v in enumerate(order):
                ranks[v] = pos
            self._ranks = ranks
        return self._ranks

    def canonical_nodes(self) -> list[int]:
        """All node ids in canonical (label-sorted) order."""
        return sorted(self.nodes(), key=self.ranks().__getitem__)

    def _check_node(self, v: int) -> None:
        if not 0 <= v < len(self._labels):
            raise DomainError(f"unknown node id {v}")

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class Subgraph:
    """A node-induced fragment of a parent graph.

    Nodes keep their parent ids (so the mapping back to the parent is the
    identity) and are listed in canonical rank order.
    """

    parent: Graph
    nodes: tuple[int, ...]
    adj: dict[int, set[int]]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj.values()) // 2

    def neighbors(self, v: int) -> set[int]:
        try:
            return self.adj[v]
        except KeyError:
            raise DomainError(f"node id {v} not in subgraph") from None


def whole_graph(g: Graph) -> Subgraph:
    """View the entire graph as a Subgraph of itself."""
    nodes = tuple(g.canonical_nodes())
    return Subgraph(g, nodes, {v: set(g.neighbors(v)) for v in nodes})


def ego_network(v: int, g: Graph) -> Subgraph:
    """Subgraph induced by ``v`` together with all its neighbors."""
    g._check_node(v)
    members = g.neighbors(v) | {v}
    ranks = g.ranks()
    nodes = tuple(sorted(members, key=ranks.__getitem__))
    adj = {u: g.neighbors(u) & members for u in nodes}
    return Subgraph(g, nodes, adj)


def ego_minus_ego(v: int, g: Graph) -> Subgraph:
    """Ego network of ``v`` with the ego and its incident edges removed.

    The result may be edgeless or empty (degree-0 ego); it is frequently
    disconnected, which downstream propagation must tolerate.
    """
    g._check_node(v)
    members = g.neighbors(v)
    ranks = g.ranks()
    nodes = tuple(sorted(members, key=ranks.__getitem__))
    adj = {u: g.neighbors(u) & members for u in nodes}
    return Subgraph(g, nodes, adj)


# -- file formats -----------------------------------------------------------


def load_edge_list(path) -> Graph:
    """Read a whitespace-separated edge list into a Graph.

    Each non-comment line holds two node labels; a third field (typically a
    weight) is ignored with a count, since this engine is unweighted.
    Duplicate edges and self-loops are dropped silently and tallied in the
    returned graph's ``load_report``.  An empty file yields an empty graph.
    """
    g = Graph()
    report = LoadReport()
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            report.lines += 1
            parts = line.split()
            if len(parts) == 2:
                a, b = parts
            elif len(parts) == 3:
                a, b = parts[0], parts[1]
                report.extra_fields_ignored += 1
            else:
                raise GraphParseError(
                    path, line_no, f"expected two node labels, got {len(parts)} fields"
                )
            u, v = g.add_node(a), g.add_node(b)
            if u == v:
                report.self_loops_dropped += 1
                continue
            if g.add_edge(u, v):
                report.edges_added += 1
            else:
                report.duplicates_dropped += 1
    if report.extra_fields_ignored:
        logger.warning(
            "%s: ignored third field on %d lines (weights are not used)",
            path,
            report.extra_fields_ignored,
        )
    g.load_report = report
    return g


def save_edge_list(g: Graph, path) -> None:
    """Write the graph as a deterministic whitespace edge list.

    The format is strictly two labels per line, so isolated nodes cannot be
    expressed and are dropped; graphs loaded from edge lists never have any.
    """
    ranks = g.ranks()
    ordered = sorted(
        (sorted((u, v), key=ranks.__getitem__) for u, v in g.edges()),
        key=lambda e: (ranks[e[0]], ranks[e[1]]),
    )
    with open(path, "w", encoding="utf-8") as handle:
        for a, b in ordered:
            handle.write(f"{g.label_of(a)} {g.label_of(b)}\n")


@dataclass
class AttributeTable:
    """node id -> set of qualitative attribute strings.

    ``unknown`` lists labels that appeared in the attribute file but name
    no graph node; they are a warning, not an error.
    """

    attrs: dict[int, set[str]] = field(default_factory=dict)
    unknown: list[str] = field(default_factory=list)

    def get(self, v: int) -> set[str]:
        return self.attrs.get(v, set())

    def __len__(self) -> int:
        return len(self.attrs)


def load_attributes(path, g: Graph) -> AttributeTable:
    """Read ``label|attr1,attr2,...`` lines keyed against ``g``'s nodes.

    Repeated lines for one node accumulate (set union).  An empty
    attribute list ("a|") is legal and yields the empty set.
    """
    table = AttributeTable()
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "|" not in line:
                raise GraphParseError(path, line_no, "expected 'label|attr,...' format")
            label, _, rest = line.partition("|")
            label = label.strip()
            values = {a.strip() for a in rest.split(",") if a.strip()}
            if not g.has_node(label):
                table.unknown.append(label)
                continue
            table.attrs.setdefault(g.id_of(label), set()).update(values)
    if table.unknown:
        logger.warning(
            "%s: %d attribute lines name unknown nodes", path, len(table.unknown)
        )
    return table


def save_attributes(table: AttributeTable, g: Graph, path) -> None:
    """Write an attribute table in the same format ``load_attributes`` reads."""
    ranks = g.ranks()
    with open(path, "w", encoding="utf-8") as handle:
        for v in sorted(table.attrs, key=ranks.__getitem__):
            values = ",".join(sorted(table.attrs[v]))
            handle.write(f"{g.label_of(v)}|{values}\n")
