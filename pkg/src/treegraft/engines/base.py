"""Shared refine() template for all engines."""

import logging
from typing import Tuple

from ..core.clusters import check_same_leaves, rf_distance
from ..core.tree import Tree
from .models import RefinementReport

logger = logging.getLogger(__name__)


class BaseEngine:
    """Copy t, run the engine-specific pass over source, fill the report."""

    name = "base"

    def __init__(self, measure_rf: bool = True):
        """
        Initialize engine.

        Args:
            measure_rf: Compute rf_before/rf_after (costs a cluster
                enumeration of both trees)
        """
        self.measure_rf = measure_rf

    def refine(self, t: Tree, source: Tree) -> Tuple[Tree, RefinementReport]:
        """
        Refine a copy of ``t`` with every compatible cluster of ``source``.

        Raises:
            LeafSetMismatchError: the trees have different leaf sets
        """
        check_same_leaves(t, source)
        report = RefinementReport(engine=self.name, n=t.n_leaves)
        if self.measure_rf:
            report.rf_before = rf_distance(source, t)

        host = t.copy()
        self._run(host, source, report)

        if self.measure_rf:
            report.rf_after = rf_distance(source, host)
        logger.debug("%r", report)
        return host, report

    def _run(self, host: Tree, source: Tree, report: RefinementReport):
        raise NotImplementedError

    @staticmethod
    def is_trivial(source: Tree, u: int) -> bool:
        return not 1 < source.size(u) < source.n_leaves
