"""Clusters, cluster sets, Robinson-Foulds distance and the compatibility oracle."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import LeafSetMismatchError, UnknownTaxonError
from .tree import NodeId, Tree


@dataclass(frozen=True)
class Cluster:
    """Leaf set of one node, as a sorted tuple of taxon ids."""

    ids: Tuple[int, ...]

    @classmethod
    def of(cls, taxon_ids: Iterable[int]) -> "Cluster":
        return cls(tuple(sorted(set(taxon_ids))))

    @classmethod
    def from_labels(cls, tree: Tree, labels: Iterable[str]) -> "Cluster":
        return cls.of(tree.taxa.id_of(label) for label in labels)

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids)

    def __contains__(self, taxon_id) -> bool:
        return taxon_id in self.members

    @property
    def members(self) -> FrozenSet[int]:
        return frozenset(self.ids)

    def labels(self, tree: Tree) -> List[str]:
        return [tree.taxa.label_of(i) for i in self.ids]

    def is_trivial(self, n_leaves: int) -> bool:
        return not 1 < len(self.ids) < n_leaves


@dataclass(frozen=True)
class ClusterSet:
    """Order-insensitive set of nontrivial clusters of one tree."""

    clusters: FrozenSet[Cluster] = frozenset()

    def __len__(self) -> int:
        return len(self.clusters)

    def __iter__(self) -> Iterator[Cluster]:
        return iter(sorted(self.clusters, key=lambda c: (len(c), c.ids)))

    def __contains__(self, cluster) -> bool:
        return cluster in self.clusters

    def difference(self, other: "ClusterSet") -> "ClusterSet":
        return ClusterSet(self.clusters - other.clusters)

    def union(self, other: "ClusterSet") -> "ClusterSet":
        return ClusterSet(self.clusters | other.clusters)

    def symmetric_difference(self, other: "ClusterSet") -> "ClusterSet":
        return ClusterSet(self.clusters ^ other.clusters)

    def issubset(self, other: "ClusterSet") -> bool:
        return self.clusters <= other.clusters


def check_same_leaves(ta: Tree, tb: Tree):
    """Raise LeafSetMismatchError unless both trees have the same leaf labels."""
    if ta.taxa != tb.taxa:
        left, right = set(ta.leaf_index), set(tb.leaf_index)
        raise LeafSetMismatchError(left - right, right - left)


def leaf_set(tree: Tree, u: NodeId) -> Cluster:
    """L(u): taxon ids of all leaves below ``u``."""
    return Cluster.of(tree.leaf_taxon(v) for v in tree.iter_leaves(u))


def clusters(tree: Tree) -> ClusterSet:
    """C(tree): clusters of internal non-root nodes, trivial ones excluded."""
    n = tree.n_leaves
    nodes = tree.nodes
    below = {}
    found = set()
    for v in tree.postorder():
        node = nodes[v]
        if not node.children:
            below[v] = [tree.leaf_taxon(v)]
            continue
        ids = []
        for c in node.children:
            ids.extend(below.pop(c))
        below[v] = ids
        if v != tree.root and 1 < len(ids) < n:
            found.add(Cluster(tuple(sorted(ids))))
    return ClusterSet(frozenset(found))


def rf_distance(ta: Tree, tb: Tree, symmetric: bool = False) -> int:
    """
    Robinson-Foulds distance |C(ta) - C(tb)|.

    With ``symmetric=True`` returns |C(ta) xor C(tb)| instead, the form most
    other tools report.

    Raises:
        LeafSetMismatchError: the trees have different leaf sets
    """
    check_same_leaves(ta, tb)
    ca, cb = clusters(ta), clusters(tb)
    if symmetric:
        return len(ca.symmetric_difference(cb))
    return len(ca.difference(cb))


def _cluster_leaves(tree: Tree, a: Cluster) -> List[NodeId]:
    if not a.ids:
        raise ValueError("Cluster is empty")
    return [tree.taxon_leaf(i) for i in a.ids]


def lca(tree: Tree, a: Cluster) -> NodeId:
    """
    Least common ancestor of the leaves in ``a``, by walk-up with marking.

    Each node is visited at most once, so the cost is O(n) per call.

    Raises:
        UnknownTaxonError: ``a`` names a taxon the tree lacks
    """
    leaves = _cluster_leaves(tree, a)
    nodes = tree.nodes

    # position of every ancestor of the first leaf along its root path
    path = []
    rank = {}
    v = leaves[0]
    while v is not None:
        rank[v] = len(path)
        path.append(v)
        v = nodes[v].parent

    best = 0
    joined = dict(rank)
    for leaf in leaves[1:]:
        climbed = []
        v = leaf
        while v not in joined:
            climbed.append(v)
            v = nodes[v].parent
        hit = joined[v]
        for w in climbed:
            joined[w] = hit
        best = max(best, hit)
    return path[best]


def split_lca_children(tree: Tree, a: Cluster):
    """Return (z, inside, straddling) for the LCA z of ``a``."""
    z = lca(tree, a)
    members = a.members
    inside, straddling = [], []
    for v in tree.children(z):
        hits = sum(
            1 for leaf in tree.iter_leaves(v) if tree.leaf_taxon(leaf) in members
        )
        if hits == tree.size(v):
            inside.append(v)
        elif hits:
            straddling.append(v)
    return z, inside, straddling


def compatible_oracle(a: Cluster, tree: Tree) -> bool:
    """
    True iff every child of lca(a) is disjoint from or contained in ``a``.

    Raises:
        UnknownTaxonError: ``a`` names a taxon the tree lacks
    """
    _, _, straddling = split_lca_children(tree, a)
    return not straddling


def pairwise_compatible(a: Cluster, others: Iterable[Cluster]) -> bool:
    """True iff ``a`` is disjoint from or nested with every cluster in ``others``."""
    members = a.members
    for b in others:
        other = b.members
        if members.isdisjoint(other) or members <= other or other <= members:
            continue
        return False
    return True


def find_cluster_node(tree: Tree, a: Cluster) -> Optional[NodeId]:
    """Node whose leaf set is exactly ``a``, or None if the tree lacks it."""
    try:
        z = lca(tree, a)
    except UnknownTaxonError:
        return None
    return z if tree.size(z) == len(a) else None


def closed_form_refinement(t: Tree, source: Tree) -> ClusterSet:
    """
    Cluster set every engine must produce for refine(t, source).

    Computed without any counter machinery: the clusters of ``t`` plus every
    source cluster that is pairwise compatible with all of them.
    """
    check_same_leaves(t, source)
    base = clusters(t)
    accepted = {
        a for a in clusters(source).clusters if pairwise_compatible(a, base.clusters)
    }
    return ClusterSet(base.clusters | accepted)
