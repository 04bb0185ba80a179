"""Refinement engines."""

from typing import Tuple, Type, Union

from ..core.tree import Tree
from .base import BaseEngine
from .basic import BasicEngine
from .counters import CounterState
from .fast import FastEngine
from .models import EngineKind, RefinementReport, leaf_update_bound
from .oracle import OracleEngine

ENGINES = {
    EngineKind.ORACLE: OracleEngine,
    EngineKind.BASIC: BasicEngine,
    EngineKind.FAST: FastEngine,
}


def get_engine(kind: Union[str, EngineKind] = EngineKind.FAST) -> Type[BaseEngine]:
    """
    Factory function to get the engine class for ``kind``.

    Args:
        kind: One of 'oracle', 'basic' or 'fast'

    Returns:
        Engine class

    Raises:
        ValueError: If kind is invalid
    """
    try:
        return ENGINES[EngineKind(kind)]
    except ValueError:
        raise ValueError(
            f"Unknown engine: {kind}. "
            f"Valid options: {', '.join(k.value for k in EngineKind)}"
        ) from None


def refine(
    t: Tree,
    source: Tree,
    engine: Union[str, EngineKind] = EngineKind.FAST,
    measure_rf: bool = True,
) -> Tuple[Tree, RefinementReport]:
    """Refine a copy of ``t`` with the compatible clusters of ``source``."""
    return get_engine(engine)(measure_rf=measure_rf).refine(t, source)


def refine_basic(t: Tree, source: Tree, measure_rf: bool = True):
    return BasicEngine(measure_rf=measure_rf).refine(t, source)


def refine_fast(t: Tree, source: Tree, measure_rf: bool = True):
    return FastEngine(measure_rf=measure_rf).refine(t, source)


def refine_oracle(t: Tree, source: Tree, measure_rf: bool = True):
    return OracleEngine(measure_rf=measure_rf).refine(t, source)


__all__ = [
    "BaseEngine",
    "BasicEngine",
    "CounterState",
    "ENGINES",
    "EngineKind",
    "FastEngine",
    "OracleEngine",
    "RefinementReport",
    "get_engine",
    "leaf_update_bound",
    "refine",
    "refine_basic",
    "refine_fast",
    "refine_oracle",
]
