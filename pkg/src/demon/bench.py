"""Timing harness for the parallelizable core phase (ego extraction + propagation).

The merge step is deliberately excluded: the point of these numbers is the
per-node phase, whose cost on a power-law graph stays subquadratic in the
node count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import iter_local_communities
from .graph import Graph
from .labelprop import DEFAULT_CONFIG, LpConfig
from .synth import scale_free


@dataclass
class BenchPoint:
    nodes: int
    edges: int
    seconds: float
    local_communities: int
    workers: int


def time_core_phase(g: Graph, cfg: LpConfig = DEFAULT_CONFIG, workers: int = 1) -> BenchPoint:
    """Run the per-node phase over the whole graph and time it."""
    start = time.perf_counter()
    produced = 0
    for _, locals_ in iter_local_communities(g, cfg, workers=workers):
        produced += len(locals_)
    elapsed = time.perf_counter() - start
    return BenchPoint(g.node_count, g.edge_count, elapsed, produced, workers)


def scaling_run(
    sizes: list[int],
    exponent: float = 2.5,
    min_degree: float = 4.2,
    seed: int = 7,
    workers: int = 1,
    cfg: LpConfig = DEFAULT_CONFIG,
) -> list[BenchPoint]:
    """Time the core phase on seeded scale-free graphs of growing size."""
    points = []
    for n in sizes:
        g = scale_free(n, exponent=exponent, min_degree=min_degree, seed=seed)
        points.append(time_core_phase(g, cfg, workers))
    return points


def loglog_slope(points: list[BenchPoint]) -> float:
    """Least-squares slope of log(time) against log(nodes)."""
    if len(points) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    xs = np.log([p.nodes for p in points])
    ys = np.log([p.seconds for p in points])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)
