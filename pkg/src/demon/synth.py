"""Seeded synthetic graphs and attribute tables for tests and benchmarks.

Node labels are decimal strings "0".."n-1", so canonical order coincides
with numeric order.
"""

from __future__ import annotations

import random

import numpy as np

from .graph import AttributeTable, Graph


def _empty_labeled(n: int) -> Graph:
    g = Graph()
    for i in range(n):
        g.add_node(str(i))
    return g


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p) random graph; O(n^2) pair sampling, fine for small n."""
    rng = random.Random(seed)
    g = _empty_labeled(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def planted_partition(
    blocks: int, block_size: int, p_in: float, p_out: float, seed: int = 0
) -> Graph:
    """Random graph with ``blocks`` planted groups of ``block_size`` nodes.

    Node ``i`` belongs to block ``i // block_size``; pairs inside a block
    connect with ``p_in``, across blocks with ``p_out``.
    """
    n = blocks * block_size
    rng = random.Random(seed)
    g = _empty_labeled(n)
    for u in range(n):
        for v in range(u + 1, n):
            p = p_in if u // block_size == v // block_size else p_out
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def block_attributes(g: Graph, block_size: int) -> AttributeTable:
    """One attribute per node naming its planted block."""
    table = AttributeTable()
    for v in g.nodes():
        block = int(g.label_of(v)) // block_size
        table.attrs[v] = {f"block{block}"}
    return table


def random_attributes(
    g: Graph, pool_size: int = 20, per_node: int = 3, seed: int = 0
) -> AttributeTable:
    """Attributes drawn uniformly from a fixed pool, independent of structure."""
    rng = random.Random(seed)
    pool = [f"tag{i}" for i in range(pool_size)]
    table = AttributeTable()
    for v in g.nodes():
        table.attrs[v] = set(rng.sample(pool, per_node))
    return table


def interlinked_cliques(
    cliques: int,
    clique_size: int,
    links: tuple[tuple[int, int], ...] = ((1, 0), (2, 1)),
) -> Graph:
    """Disjoint cliques joined by deterministic circulant link edges.

    Link rule ``(d, s)`` connects node ``i`` of clique ``c`` to node
    ``(i + s) mod clique_size`` of clique ``(c + d) mod cliques``.  With the
    default rules no two link neighbors of any node are adjacent to each
    other, so the cliques stay cleanly recoverable while the link edges
    provide cross-community noise.  Labels follow the block layout of
    :func:`block_attributes` (node ``i`` belongs to clique ``i // size``).
    """
    if cliques <= 2 * max(d for d, _ in links):
        raise ValueError("need more cliques than twice the largest link offset")
    g = _empty_labeled(cliques * clique_size)
    for c in range(cliques):
        base = c * clique_size
        for i in range(clique_size):
            for j in range(i + 1, clique_size):
                g.add_edge(base + i, base + j)
    for d, s in links:
        for c in range(cliques):
            target = (c + d) % cliques
            for i in range(clique_size):
                u = c * clique_size + i
                w = target * clique_size + (i + s) % clique_size
                if w not in g.neighbors(u):
                    g.add_edge(u, w)
    return g


def scale_free(
    n: int, exponent: float = 2.5, min_degree: float = 4.2, seed: int = 0
) -> Graph:
    """Configuration-model graph with a power-law degree sequence.

    Degrees are drawn from a Pareto tail with the given exponent, stubs are
    paired uniformly, and self-loops plus parallel edges are discarded.
    With the defaults the realized mean degree is about 12.
    """
    if exponent <= 2.0:
        raise ValueError("exponent must exceed 2 for a finite mean degree")
    rng = np.random.default_rng(seed)
    u = rng.random(n)
    degrees = np.floor(min_degree * (1.0 - u) ** (-1.0 / (exponent - 1.0))).astype(
        np.int64
    )
    np.minimum(degrees, n - 1, out=degrees)
    if degrees.sum() % 2:
        degrees[0] += 1

    stubs = np.repeat(np.arange(n, dtype=np.int64), degrees)
    rng.shuffle(stubs)
    half = len(stubs) // 2
    a = stubs[: 2 * half : 2]
    b = stubs[1 : 2 * half : 2]
    keep = a != b
    a, b = a[keep], b[keep]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    codes = np.unique(lo.astype(np.int64) * n + hi)
    lo = codes // n
    hi = codes % n

    g = _empty_labeled(n)
    for x, y in zip(lo.tolist(), hi.tolist()):
        g.add_edge(x, y)
    return g
