"""treegraft - greedy refinement of a rooted tree with the clusters of another."""

__version__ = "0.1.0"

# Expose main entry points for programmatic use
from .core import (
    Cluster,
    ClusterSet,
    Config,
    GenSpec,
    Tree,
    clusters,
    compatible_oracle,
    generate_tree,
    parse_newick,
    rf_distance,
    serialize_newick,
)
from .engines import CounterState, EngineKind, RefinementReport, get_engine, refine

__all__ = [
    "__version__",
    "Cluster",
    "ClusterSet",
    "Config",
    "CounterState",
    "EngineKind",
    "GenSpec",
    "RefinementReport",
    "Tree",
    "clusters",
    "compatible_oracle",
    "generate_tree",
    "get_engine",
    "parse_newick",
    "refine",
    "rf_distance",
    "serialize_newick",
]
