"""Local-first discovery of overlapping communities in undirected graphs.

Each node inspects its own neighborhood (the ego network minus the ego),
label propagation finds the groups visible there, and a containment-driven
merge assembles every node's local view into one global overlapping cover.
The process is deterministic, runs the per-node phase in parallel, and
supports incremental batch growth of the graph.
"""

from .core import (
    Community,
    CommunityCover,
    demon,
    eps_containment,
    iter_local_communities,
    local_communities,
    max_sets,
    merge,
    read_cover,
    write_cover,
    write_cover_json,
)
from .errors import (
    DeltaError,
    DemonError,
    DomainError,
    GraphParseError,
    UndefinedMetricError,
)
from .graph import (
    AttributeTable,
    Graph,
    Subgraph,
    ego_minus_ego,
    ego_network,
    load_attributes,
    load_edge_list,
    save_edge_list,
    whole_graph,
)
from .incremental import (
    GraphDelta,
    affected_nodes,
    apply_delta,
    demon_incremental,
    load_delta,
)
from .labelprop import LabelState, LpConfig, frequency_vote, propagate
from .metrics import (
    CoverStats,
    CqReport,
    community_quality,
    community_quality_subsampled,
    cover_stats,
    jaccard,
    size_distribution,
    size_distribution_export,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeTable",
    "Community",
    "CommunityCover",
    "CoverStats",
    "CqReport",
    "DeltaError",
    "DemonError",
    "DomainError",
    "Graph",
    "GraphDelta",
    "GraphParseError",
    "LabelState",
    "LpConfig",
    "Subgraph",
    "UndefinedMetricError",
    "affected_nodes",
    "apply_delta",
    "community_quality",
    "community_quality_subsampled",
    "cover_stats",
    "demon",
    "demon_incremental",
    "ego_minus_ego",
    "ego_network",
    "eps_containment",
    "frequency_vote",
    "iter_local_communities",
    "jaccard",
    "load_attributes",
    "load_delta",
    "load_edge_list",
    "local_communities",
    "max_sets",
    "merge",
    "propagate",
    "read_cover",
    "save_edge_list",
    "size_distribution",
    "size_distribution_export",
    "whole_graph",
    "write_cover",
    "write_cover_json",
]
