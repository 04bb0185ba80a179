"""Randomized cross-engine verification against the closed-form cluster set."""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from ..core.clusters import closed_form_refinement, clusters
from ..core.errors import TreegraftError
from ..core.generate import SHAPES, GenSpec, generate_tree
from ..core.newick import serialize_newick
from ..core.tree import Tree
from ..engines import EngineKind, RefinementReport, get_engine

logger = logging.getLogger(__name__)

EngineFn = Callable[[Tree, Tree], Tuple[Tree, RefinementReport]]

CONTRACTION_CHOICES = (0.0, 0.0, 0.25, 0.5, 0.9)


@dataclass
class Counterexample:
    """First failing trial, replayable through `treegraft refine`."""

    trial: int
    t_newick: str
    source_newick: str
    reason: str


@dataclass
class VerifyResult:
    trials: int
    failures: int = 0
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def default_engines() -> Dict[str, EngineFn]:
    return {
        kind.value: get_engine(kind)(measure_rf=False).refine for kind in EngineKind
    }


def make_trial(seed: int, index: int, max_n: int) -> Tuple[Tree, Tree]:
    """Random (t, source) pair for trial ``index``; depends only on its arguments."""
    rng = random.Random(f"{seed}:{index}")
    n = rng.randint(min(2, max_n), max_n)

    def draw() -> Tree:
        return generate_tree(
            GenSpec(
                leaves=n,
                seed=rng.getrandbits(63),
                shape=rng.choice(SHAPES),
                contraction_prob=rng.choice(CONTRACTION_CHOICES),
                shuffle_labels=True,
            )
        )

    return draw(), draw()


def check_trial(t: Tree, source: Tree, engines: Dict[str, EngineFn]) -> Optional[str]:
    """Run every engine; describe the first disagreement, or return None."""
    expected = closed_form_refinement(t, source)
    base = clusters(t)
    for name, engine in engines.items():
        try:
            result, report = engine(t, source)
            result.validate()
        except TreegraftError as e:
            return f"{name} raised {type(e).__name__}: {e}"
        got = clusters(result)
        if got != expected:
            missing = len(expected.difference(got))
            extra = len(got.difference(expected))
            return (
                f"{name} cluster set differs from closed form "
                f"({missing} missing, {extra} unexpected)"
            )
        if not base.issubset(got):
            return f"{name} lost clusters of t"
        if not report.bounds_ok():
            return (
                f"{name} broke a work bound "
                f"(leaf_updates={report.leaf_updates}, "
                f"loop_iterations={report.loop_iterations}, "
                f"max_leaf_charge={report.max_leaf_charge})"
            )
    return None


def _run_range(
    seed: int,
    max_n: int,
    start: int,
    stop: int,
    engines: Optional[Dict[str, EngineFn]] = None,
) -> Tuple[int, Optional[Counterexample]]:
    engines = engines or default_engines()
    failures = 0
    first = None
    for index in range(start, stop):
        t, source = make_trial(seed, index, max_n)
        reason = check_trial(t, source, engines)
        if reason is None:
            continue
        failures += 1
        logger.debug("Trial %d failed: %s", index, reason)
        if first is None:
            first = Counterexample(
                trial=index,
                t_newick=serialize_newick(t),
                source_newick=serialize_newick(source),
                reason=reason,
            )
    return failures, first


def _run_chunk(args) -> Tuple[int, Optional[Counterexample]]:
    return _run_range(*args)


def run_verify(
    trials: int,
    max_n: int,
    seed: int = 0,
    workers: int = 1,
    engines: Optional[Dict[str, EngineFn]] = None,
) -> VerifyResult:
    """
    Check all engines against the closed form on ``trials`` random pairs.

    Args:
        trials: Number of random (t, source) pairs
        max_n: Largest leaf count drawn
        seed: Base seed; trial i depends only on (seed, i)
        workers: Process pool size; results do not depend on it
        engines: Override the engine table (single worker only)

    Returns:
        VerifyResult with the lowest-numbered counterexample, if any
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    if engines is not None and workers > 1:
        raise ValueError("Custom engines can only be verified with one worker")

    if workers <= 1:
        failures, first = _run_range(seed, max_n, 0, trials, engines)
        return VerifyResult(trials=trials, failures=failures, counterexample=first)

    step = -(-trials // workers)
    chunks = [
        (seed, max_n, start, min(start + step, trials))
        for start in range(0, trials, step)
    ]
    result = VerifyResult(trials=trials)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        outcomes: List[Tuple[int, Optional[Counterexample]]] = list(
            pool.map(_run_chunk, chunks)
        )
    for failures, first in outcomes:
        result.failures += failures
        if first is not None and result.counterexample is None:
            result.counterexample = first
    return result
