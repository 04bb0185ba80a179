"""
Heavy-child engine.

Solve(u) leaves the counters holding exactly L(u). Light children are
solved first, each followed by a clear; the heaviest child is solved last
and its counts are kept; then only the light subtrees are added again. A
light child has at most half of its parent's leaves, so every leaf is
re-added at most log2(n) times and the pass costs O(n log n).
"""

import logging
from typing import List

from ..core.tree import NodeId, Tree
from .base import BaseEngine
from .counters import CounterState
from .models import EngineKind, RefinementReport

logger = logging.getLogger(__name__)

_SOLVE, _CLEAR, _FINISH = 0, 1, 2


class FastEngine(BaseEngine):
    """Heavy-child traversal of the source tree; any node degree is allowed."""

    name = EngineKind.FAST.value

    def _run(self, host: Tree, source: Tree, report: RefinementReport):
        state = CounterState(host)
        charges = [0] * len(source.nodes)
        leaf_index = host.leaf_index
        source_nodes = source.nodes

        # explicit stack: caterpillar sources are as deep as they are wide
        stack = [(_SOLVE, source.root)]
        while stack:
            action, u = stack.pop()

            if action == _CLEAR:
                state.clear_counters()
                continue

            if action == _FINISH:
                self._finish(state, source, u, charges, report)
                continue

            kids = source_nodes[u].children
            if not kids:
                charges[u] += 1
                state.add_leaf(leaf_index[source_nodes[u].label])
                continue

            # stable sort: among equal sizes the last one is the heavy child
            ordered = sorted(kids, key=lambda c: source_nodes[c].size)
            plan = []
            for c in ordered[:-1]:
                plan.append((_SOLVE, c))
                plan.append((_CLEAR, c))
            plan.append((_SOLVE, ordered[-1]))
            plan.append((_FINISH, u))
            stack.extend(reversed(plan))

        report.leaf_updates = state.leaf_updates
        report.loop_iterations = state.loop_iterations
        report.refinement_touches = state.refinement_touches
        report.max_leaf_charge = max(charges[v] for v in source.iter_leaves())

    def _finish(
        self,
        state: CounterState,
        source: Tree,
        u: NodeId,
        charges: List[int],
        report: RefinementReport,
    ):
        # the root cluster is trivial, its light subtrees need no re-adding
        if self.is_trivial(source, u):
            return
        source_nodes = source.nodes
        ordered = sorted(source_nodes[u].children, key=lambda c: source_nodes[c].size)
        z = None
        for c in ordered[:-1]:
            reached = state.update_counter_subtree(source, c, charges)
            z = state.closer_to_root(z, reached)

        size = source_nodes[u].size
        report.attempted += 1
        if not state.is_compatible(size, z):
            logger.debug("Rejected cluster of %d leaves at node %d", size, u)
            return
        report.accepted += 1
        before = len(state.host.nodes)
        state.apply_refinement(z, size)
        report.inserted += len(state.host.nodes) - before
