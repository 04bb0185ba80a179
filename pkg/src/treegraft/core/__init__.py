"""Core tree model, Newick codec, cluster algebra and configuration."""

from .clusters import (
    Cluster,
    ClusterSet,
    check_same_leaves,
    closed_form_refinement,
    clusters,
    compatible_oracle,
    find_cluster_node,
    lca,
    leaf_set,
    pairwise_compatible,
    rf_distance,
)
from .config import Config
from .errors import (
    DuplicateLeafLabelError,
    EmptyTreeError,
    GenSpecError,
    InconsistentPropagationError,
    InvalidTreeError,
    LeafAlreadyAddedError,
    LeafSetMismatchError,
    MalformedNewickError,
    NewickError,
    TreegraftError,
    UnknownTaxonError,
    UnlabeledLeafError,
)
from .generate import GenSpec, generate_tree
from .newick import parse_newick, read_newick_file, serialize_newick
from .tree import Node, TaxonTable, Tree, build_indices, star_tree

__all__ = [
    "Cluster",
    "ClusterSet",
    "Config",
    "DuplicateLeafLabelError",
    "EmptyTreeError",
    "GenSpec",
    "GenSpecError",
    "InconsistentPropagationError",
    "InvalidTreeError",
    "LeafAlreadyAddedError",
    "LeafSetMismatchError",
    "MalformedNewickError",
    "NewickError",
    "Node",
    "TaxonTable",
    "Tree",
    "TreegraftError",
    "UnknownTaxonError",
    "UnlabeledLeafError",
    "build_indices",
    "check_same_leaves",
    "closed_form_refinement",
    "clusters",
    "compatible_oracle",
    "find_cluster_node",
    "generate_tree",
    "lca",
    "leaf_set",
    "pairwise_compatible",
    "parse_newick",
    "read_newick_file",
    "rf_distance",
    "serialize_newick",
    "star_tree",
]
