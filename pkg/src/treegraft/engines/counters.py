"""
Amortized leaf counters over the working tree.

A node is *complete* when its counter equals its leaf count. Adding a leaf
sets its counter to 1 and pushes complete counts upward, so after adding a
leaf set S every node's counter is the number of leaves of S found in its
complete children. A cluster is compatible with the working tree exactly
when the topmost touched node ends up counting the whole cluster.
"""

import logging
from typing import List, Optional

from ..core.errors import (
    InconsistentPropagationError,
    LeafAlreadyAddedError,
    UnknownTaxonError,
)
from ..core.tree import NodeId, Tree

logger = logging.getLogger(__name__)


class CounterState:
    """Counters, dirty list and propagation lists for one working tree."""

    def __init__(self, host: Tree):
        """
        Initialize a cleared state.

        Args:
            host: Working tree; the state owns it while refining
        """
        self.host = host
        self.counter: List[int] = []
        self.propagated: List[List[NodeId]] = []
        self.dirty: List[NodeId] = []
        self._is_dirty: List[bool] = []
        self._grow()

        # instrumentation
        self.leaf_updates = 0
        self.loop_iterations = 0
        self.refinement_touches = 0

    def _grow(self):
        missing = len(self.host.nodes) - len(self.counter)
        if missing > 0:
            self.counter.extend([0] * missing)
            self.propagated.extend([] for _ in range(missing))
            self._is_dirty.extend([False] * missing)

    def _mark(self, v: NodeId):
        if not self._is_dirty[v]:
            self._is_dirty[v] = True
            self.dirty.append(v)

    @property
    def work_meter(self) -> int:
        return self.loop_iterations

    # ------------------------------------------------------------------ #
    # Counter operations
    # ------------------------------------------------------------------ #

    def clear_counters(self):
        """Reset every dirty node; cost is proportional to the dirty list."""
        counter, propagated, is_dirty = self.counter, self.propagated, self._is_dirty
        for v in self.dirty:
            counter[v] = 0
            propagated[v].clear()
            is_dirty[v] = False
        self.dirty.clear()

    def add_leaf(self, v: NodeId) -> NodeId:
        """
        Add host leaf node ``v`` and propagate complete counts upward.

        Returns:
            The last node whose counter was incremented
        """
        counter = self.counter
        if counter[v]:
            raise LeafAlreadyAddedError(self.host.nodes[v].label)
        nodes = self.host.nodes
        counter[v] = 1
        self._mark(v)
        self.leaf_updates += 1
        while counter[v] == nodes[v].size:
            p = nodes[v].parent
            if p is None:
                break
            counter[p] += counter[v]
            self.propagated[p].append(v)
            self._mark(p)
            self.loop_iterations += 1
            v = p
        return v

    def update_counter_leaf(self, taxon: str) -> NodeId:
        """
        Add the leaf labelled ``taxon``.

        Raises:
            UnknownTaxonError: the host has no such leaf
            LeafAlreadyAddedError: the leaf was added since the last clear
        """
        return self.add_leaf(self.host.leaf_node(taxon))

    def closer_to_root(self, z: Optional[NodeId], p: NodeId) -> NodeId:
        """Keep whichever of ``z`` and ``p`` sits closer to the root."""
        nodes = self.host.nodes
        if z is None or nodes[p].size > nodes[z].size:
            return p
        return z

    def update_counter_subtree(
        self, source: Tree, u: NodeId, charges: Optional[List[int]] = None
    ) -> NodeId:
        """
        Add every leaf of ``source`` below ``u``; return the topmost node reached.

        Args:
            source: Tree supplying the leaf set L(u)
            u: Node of ``source``
            charges: Optional per-source-node tally of how often each leaf
                was added

        Raises:
            UnknownTaxonError: a leaf of L(u) is missing from the host
            LeafAlreadyAddedError: a leaf of L(u) was already added
        """
        leaf_index = self.host.leaf_index
        source_nodes = source.nodes
        z = None
        for leaf in source.iter_leaves(u):
            label = source_nodes[leaf].label
            try:
                v = leaf_index[label]
            except KeyError:
                raise UnknownTaxonError(label) from None
            if charges is not None:
                charges[leaf] += 1
            z = self.closer_to_root(z, self.add_leaf(v))
        return z

    def is_compatible(self, cluster_size: int, z: NodeId) -> bool:
        """True iff the accumulated cluster of ``cluster_size`` leaves fits at ``z``."""
        return self.counter[z] == cluster_size

    def apply_refinement(self, z: NodeId, cluster_size: int) -> NodeId:
        """
        Insert the just-tested cluster under ``z``; return the node carrying it.

        The children that propagated into ``z`` are exactly the cluster's
        pieces. If they already form one node (or all of ``z``) nothing
        changes. Otherwise they move under a new child of ``z`` whose counter
        is set complete, so the state stays valid for further additions.

        Raises:
            InconsistentPropagationError: propagated counts do not sum to
                ``cluster_size``
        """
        host = self.host
        moved = self.propagated[z]
        total = sum(self.counter[w] for w in moved)
        if total != cluster_size:
            raise InconsistentPropagationError(
                f"Children propagated into node {z} carry {total} leaves, "
                f"expected {cluster_size}"
            )

        if len(moved) == host.degree(z):
            return z
        if len(moved) == 1 and host.size(moved[0]) == cluster_size:
            return moved[0]

        new_node = host.regroup(z, moved, cluster_size)
        self._grow()
        self.counter[new_node] = cluster_size
        self.propagated[new_node] = list(moved)
        self.propagated[z] = [new_node]
        self._mark(new_node)
        self.refinement_touches += len(moved) + 1
        logger.debug(
            "Spliced cluster of %d leaves under node %d as node %d",
            cluster_size,
            z,
            new_node,
        )
        return new_node

    # ------------------------------------------------------------------ #
    # Debug helpers
    # ------------------------------------------------------------------ #

    def counters_of(self, labels) -> List[int]:
        """Counters of the host leaves with the given labels."""
        return [self.counter[self.host.leaf_node(label)] for label in labels]
