"""Reference engine built directly on the LCA compatibility definition."""

import logging

from ..core.clusters import leaf_set, split_lca_children
from ..core.tree import Tree
from .base import BaseEngine
from .models import EngineKind, RefinementReport

logger = logging.getLogger(__name__)


class OracleEngine(BaseEngine):
    """Test each source cluster against the LCA children; regroup on success."""

    name = EngineKind.ORACLE.value

    def _run(self, host: Tree, source: Tree, report: RefinementReport):
        for u in source.internal_nodes():
            if self.is_trivial(source, u):
                continue
            cluster = leaf_set(source, u)
            report.attempted += 1
            z, inside, straddling = split_lca_children(host, cluster)
            if straddling:
                logger.debug(
                    "Rejected cluster of %d leaves at node %d", len(cluster), u
                )
                continue
            report.accepted += 1
            if len(inside) == host.degree(z):
                continue
            if len(inside) == 1 and host.size(inside[0]) == len(cluster):
                continue
            host.regroup(z, inside, len(cluster))
            report.inserted += 1
            report.refinement_touches += len(inside) + 1
