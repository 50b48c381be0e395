import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from demon import Graph

TWO_TRIANGLES = [("1", "2"), ("1", "3"), ("2", "3"), ("3", "4"), ("3", "5"), ("4", "5")]

# two triangles {1,2,3} and {4,5,6} joined by the single edge (3,6)
BARBELL = [
    ("1", "2"), ("1", "3"), ("2", "3"),
    ("4", "5"), ("4", "6"), ("5", "6"),
    ("3", "6"),
]

# two hub-plus-leaf-path blocks bridged at the path ends; discovered
# communities span non-adjacent same-block pairs, so attribute cohesion
# scores strictly above the edge baseline (exactly 50/49 with block tags)
TWO_FANS = [
    ("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"),
    ("2", "3"), ("3", "4"), ("4", "5"),
    ("6", "7"), ("6", "8"), ("6", "9"), ("6", "10"),
    ("7", "8"), ("8", "9"), ("9", "10"),
    ("5", "10"),
]


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(TWO_TRIANGLES)


@pytest.fixture
def barbell() -> Graph:
    return Graph.from_edges(BARBELL)


def label_sets(cover, g) -> set[frozenset[str]]:
    return {frozenset(g.label_of(m) for m in c) for c in cover.communities}


def labeled(*sets) -> set[frozenset[str]]:
    return {frozenset(s) for s in sets}


def random_edge_list(n: int, p: float, seed: int) -> list[tuple[str, str]]:
    """Seeded ER edge list over labels '0'..'n-1' (test-local, not synth)."""
    rng = random.Random(seed)
    return [
        (str(u), str(v))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
