"""Quadratic engine: one full accumulation per source cluster."""

import logging

from ..core.tree import Tree
from .base import BaseEngine
from .counters import CounterState
from .models import EngineKind, RefinementReport

logger = logging.getLogger(__name__)


class BasicEngine(BaseEngine):
    """
    For each nontrivial source node in post-order: clear, add L(u), test, splice.

    Adds |L(u)| leaves per cluster, O(n^2) leaf additions in the worst case
    (caterpillar sources).
    """

    name = EngineKind.BASIC.value

    def _run(self, host: Tree, source: Tree, report: RefinementReport):
        state = CounterState(host)
        for u in source.internal_nodes():
            if self.is_trivial(source, u):
                continue
            size = source.size(u)
            state.clear_counters()
            z = state.update_counter_subtree(source, u)
            report.attempted += 1
            if not state.is_compatible(size, z):
                logger.debug("Rejected cluster of %d leaves at node %d", size, u)
                continue
            report.accepted += 1
            before = len(host.nodes)
            state.apply_refinement(z, size)
            report.inserted += len(host.nodes) - before

        report.leaf_updates = state.leaf_updates
        report.loop_iterations = state.loop_iterations
        report.refinement_touches = state.refinement_touches
