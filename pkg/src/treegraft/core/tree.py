"""Arena-backed rooted trees with cached subtree sizes and depths."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from .errors import (
    DuplicateLeafLabelError,
    EmptyTreeError,
    InvalidTreeError,
    UnknownTaxonError,
    UnlabeledLeafError,
)

NodeId = int


class TaxonTable:
    """
    Dense integer ids for the taxa of a tree.

    Ids are the ranks of the labels in sorted order, so two trees over the
    same leaf set always agree on every id without sharing a table object.
    """

    def __init__(self, labels: Iterable[str] = ()):
        self.labels = tuple(sorted(labels))
        self._ids = {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._ids

    def __eq__(self, other) -> bool:
        return isinstance(other, TaxonTable) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"TaxonTable({len(self.labels)} taxa)"

    def id_of(self, label: str) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise UnknownTaxonError(label) from None

    def label_of(self, taxon_id: int) -> str:
        if not 0 <= taxon_id < len(self.labels):
            raise UnknownTaxonError(taxon_id)
        return self.labels[taxon_id]


@dataclass
class Node:
    """One arena slot. ``size`` is always exact; ``depth`` may be stale."""

    parent: Optional[NodeId] = None
    children: Dict[NodeId, None] = field(default_factory=dict)
    label: Optional[str] = None
    size: int = 1
    depth: int = 1

    @property
    def is_leaf(self) -> bool:
        return not self.children


class Tree:
    """
    Rooted tree stored as an arena of ``Node`` records.

    Build it with ``add_node`` and call ``finalize`` once the topology is
    complete; after that the leaf index, taxon table and size/depth caches
    are available. Node ids are list positions and never change, new nodes
    are only ever appended.
    """

    def __init__(self):
        self.nodes: List[Node] = []
        self.root: Optional[NodeId] = None
        self.leaf_index: Dict[str, NodeId] = {}
        self.taxa = TaxonTable()
        self._depths_fresh = False

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return f"Tree(nodes={len(self.nodes)}, leaves={len(self.leaf_index)})"

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #

    def add_node(
        self, parent: Optional[NodeId] = None, label: Optional[str] = None
    ) -> NodeId:
        """Append a node under ``parent`` (or as the root) and return its id."""
        node_id = len(self.nodes)
        self.nodes.append(Node(parent=parent, label=label))
        if parent is None:
            if self.root is not None:
                raise InvalidTreeError("Tree already has a root")
            self.root = node_id
        else:
            self.nodes[parent].children[node_id] = None
        self._depths_fresh = False
        return node_id

    def finalize(self) -> "Tree":
        """
        Check labels, build the leaf index and taxon table, fill caches.

        Raises:
            EmptyTreeError: no nodes were added
            UnlabeledLeafError: a leaf has no label
            DuplicateLeafLabelError: two leaves share a label
            InvalidTreeError: an internal node has a single child
        """
        if self.root is None:
            raise EmptyTreeError("Tree has no nodes")

        leaf_index = {}
        for node_id in self.preorder():
            node = self.nodes[node_id]
            if node.children:
                if len(node.children) == 1:
                    raise InvalidTreeError(f"Node {node_id} has a single child")
                continue
            if not node.label:
                raise UnlabeledLeafError(f"Leaf node {node_id} has no label")
            if node.label in leaf_index:
                raise DuplicateLeafLabelError(node.label)
            leaf_index[node.label] = node_id

        self.leaf_index = leaf_index
        self.taxa = TaxonTable(leaf_index)
        return build_indices(self)

    def copy(self) -> "Tree":
        """Independent copy; mutating one tree never affects the other."""
        other = Tree()
        other.nodes = [
            Node(n.parent, dict(n.children), n.label, n.size, n.depth)
            for n in self.nodes
        ]
        other.root = self.root
        other.leaf_index = dict(self.leaf_index)
        other.taxa = self.taxa
        other._depths_fresh = self._depths_fresh
        return other

    # ------------------------------------------------------------------ #
    # Queries
    # ------------------------------------------------------------------ #

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_index)

    def children(self, node_id: NodeId) -> List[NodeId]:
        """Snapshot of the children of ``node_id`` in stored order."""
        return list(self.nodes[node_id].children)

    def degree(self, node_id: NodeId) -> int:
        return len(self.nodes[node_id].children)

    def parent(self, node_id: NodeId) -> Optional[NodeId]:
        return self.nodes[node_id].parent

    def size(self, node_id: NodeId) -> int:
        return self.nodes[node_id].size

    def is_leaf(self, node_id: NodeId) -> bool:
        return not self.nodes[node_id].children

    def depth(self, node_id: NodeId) -> int:
        """Depth with the root at 1, refreshed on first read after a splice."""
        if not self._depths_fresh:
            self._refresh_depths()
        return self.nodes[node_id].depth

    def leaf_node(self, label: str) -> NodeId:
        try:
            return self.leaf_index[label]
        except KeyError:
            raise UnknownTaxonError(label) from None

    def taxon_leaf(self, taxon_id: int) -> NodeId:
        return self.leaf_node(self.taxa.label_of(taxon_id))

    def leaf_taxon(self, node_id: NodeId) -> int:
        return self.taxa.id_of(self.nodes[node_id].label)

    def preorder(self, start: Optional[NodeId] = None) -> Iterator[NodeId]:
        stack = [self.root if start is None else start]
        nodes = self.nodes
        while stack:
            node_id = stack.pop()
            yield node_id
            stack.extend(reversed(nodes[node_id].children))

    def postorder(self, start: Optional[NodeId] = None) -> Iterator[NodeId]:
        stack = [(self.root if start is None else start, False)]
        nodes = self.nodes
        while stack:
            node_id, expanded = stack.pop()
            if expanded or not nodes[node_id].children:
                yield node_id
                continue
            stack.append((node_id, True))
            stack.extend((c, False) for c in reversed(nodes[node_id].children))

    def iter_leaves(self, start: Optional[NodeId] = None) -> Iterator[NodeId]:
        nodes = self.nodes
        for node_id in self.preorder(start):
            if not nodes[node_id].children:
                yield node_id

    def internal_nodes(self) -> Iterator[NodeId]:
        """Internal nodes in post-order, root last."""
        nodes = self.nodes
        return (v for v in self.postorder() if nodes[v].children)

    # ------------------------------------------------------------------ #
    # Mutation
    # ------------------------------------------------------------------ #

    def regroup(self, z: NodeId, members: Sequence[NodeId], size: int) -> NodeId:
        """
        Move ``members`` (children of ``z``) under a new child of ``z``.

        The new node is appended after the remaining children of ``z`` and
        keeps the moved children in the order given. Cost is O(len(members)).
        """
        nodes = self.nodes
        kids = nodes[z].children
        moved = list(dict.fromkeys(members))
        if any(c not in kids for c in moved):
            raise InvalidTreeError(f"Regroup members are not all children of {z}")
        if len(moved) < 2 or len(moved) == len(kids):
            raise InvalidTreeError(
                f"Regrouping {len(moved)} of {len(kids)} children would create "
                "a unary node"
            )

        new_id = len(nodes)
        nodes.append(
            Node(
                parent=z,
                children=dict.fromkeys(moved),
                size=size,
                depth=nodes[z].depth + 1,
            )
        )
        for c in moved:
            del kids[c]
            nodes[c].parent = new_id
        kids[new_id] = None
        self._depths_fresh = False
        return new_id

    # ------------------------------------------------------------------ #
    # Cache maintenance and validation
    # ------------------------------------------------------------------ #

    def _refresh_depths(self):
        nodes = self.nodes
        nodes[self.root].depth = 1
        for node_id in self.preorder():
            d = nodes[node_id].depth + 1
            for c in nodes[node_id].children:
                nodes[c].depth = d
        self._depths_fresh = True

    def validate(self) -> "Tree":
        """
        Recheck every structural invariant from scratch.

        Raises:
            InvalidTreeError: on the first violation found
        """
        if self.root is None:
            raise InvalidTreeError("Tree has no root")
        nodes = self.nodes
        if nodes[self.root].parent is not None:
            raise InvalidTreeError("Root has a parent")

        seen = set()
        leaves = {}
        depths = {self.root: 1}
        for node_id in self.preorder():
            if node_id in seen:
                raise InvalidTreeError(f"Node {node_id} reached twice")
            seen.add(node_id)
            node = nodes[node_id]
            for c in node.children:
                if nodes[c].parent != node_id:
                    raise InvalidTreeError(f"Node {c} has wrong parent link")
                depths[c] = depths[node_id] + 1
            if len(node.children) == 1:
                raise InvalidTreeError(f"Node {node_id} is unary")
            if not node.children:
                leaves[node.label] = node_id
        if len(seen) != len(nodes):
            raise InvalidTreeError(
                f"{len(nodes) - len(seen)} nodes are unreachable from the root"
            )
        if leaves != self.leaf_index:
            raise InvalidTreeError("Leaf index disagrees with the tree")

        for node_id in self.postorder():
            node = nodes[node_id]
            expected = sum(nodes[c].size for c in node.children) or 1
            if node.size != expected:
                raise InvalidTreeError(
                    f"Node {node_id} caches size {node.size}, actual {expected}"
                )
            if self.depth(node_id) != depths[node_id]:
                raise InvalidTreeError(f"Node {node_id} caches a stale depth")
        return self


def build_indices(tree: Tree) -> Tree:
    """Fill size and depth caches for every node in one pass."""
    nodes = tree.nodes
    order = list(tree.preorder())
    nodes[tree.root].depth = 1
    for node_id in order:
        d = nodes[node_id].depth + 1
        for c in nodes[node_id].children:
            nodes[c].depth = d
    for node_id in reversed(order):
        node = nodes[node_id]
        if node.children:
            node.size = sum(nodes[c].size for c in node.children)
        else:
            node.size = 1
    tree._depths_fresh = True
    return tree


def star_tree(labels: Iterable[str]) -> Tree:
    """Root with every label as a direct leaf child (a bare leaf for one label)."""
    labels = list(labels)
    tree = Tree()
    if len(labels) == 1:
        tree.add_node(label=labels[0])
        return tree.finalize()
    root = tree.add_node()
    for label in labels:
        tree.add_node(root, label)
    return tree.finalize()
