"""Benchmark harness checking the operation-count bounds at scale."""

import logging
import math
import random
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Sequence, TextIO

import pandas as pd

from ..core.generate import GenSpec, generate_tree
from ..core.tree import Tree, star_tree
from ..engines import EngineKind, get_engine

logger = logging.getLogger(__name__)

COLUMNS = [
    "n",
    "engine",
    "wall_time_s",
    "leaf_updates",
    "loop_iterations",
    "bounds_ok",
]
TARGETS = ("star", "yule")


@dataclass
class BenchRow:
    """One (size, engine) measurement; counters are the worst over repeats."""

    n: int
    engine: str
    wall_time_s: float
    leaf_updates: int
    loop_iterations: int
    bounds_ok: bool


def _seed_for(seed: int, n: int, repeat: int, role: str) -> int:
    return random.Random(f"{seed}:{n}:{repeat}:{role}").getrandbits(63)


def _target_tree(source: Tree, target: str, seed: int) -> Tree:
    if target == "star":
        return star_tree(source.leaf_index)
    # generated labels are t1..tN, the same set as the source
    return generate_tree(GenSpec(leaves=source.n_leaves, seed=seed, shape="yule"))


def run_bench(
    sizes: Sequence[int],
    engines: Iterable[str],
    seed: int = 0,
    repeats: int = 1,
    shape: str = "yule",
    target: str = "star",
) -> List[BenchRow]:
    """
    Time each engine on each size and check its counters against the bounds.

    Args:
        sizes: Leaf counts, ascending
        engines: Engine names
        seed: Base seed
        repeats: Seeds per (size, engine); wall time is averaged
        shape: Shape of the source tree
        target: Tree being refined, 'star' or a random 'yule' tree

    Returns:
        One BenchRow per (size, engine)
    """
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError(f"sizes must be ascending, got {sizes}")
    if target not in TARGETS:
        raise ValueError(f"Unknown target: {target}. Valid options: star, yule")
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    kinds = [EngineKind(e) for e in engines]

    rows = []
    for n in sizes:
        pairs = []
        for r in range(repeats):
            source = generate_tree(
                GenSpec(leaves=n, seed=_seed_for(seed, n, r, "source"), shape=shape)
            )
            t = _target_tree(source, target, _seed_for(seed, n, r, "t"))
            pairs.append((t, source))

        for kind in kinds:
            engine = get_engine(kind)(measure_rf=False)
            elapsed = 0.0
            worst_updates = worst_loops = 0
            ok = True
            for t, source in pairs:
                started = time.perf_counter()
                _, report = engine.refine(t, source)
                elapsed += time.perf_counter() - started
                worst_updates = max(worst_updates, report.leaf_updates)
                worst_loops = max(worst_loops, report.loop_iterations)
                ok = ok and report.bounds_ok()
            row = BenchRow(
                n=n,
                engine=kind.value,
                wall_time_s=elapsed / repeats,
                leaf_updates=worst_updates,
                loop_iterations=worst_loops,
                bounds_ok=ok,
            )
            logger.debug("%s", row)
            rows.append(row)
    return rows


def rows_to_frame(rows: Iterable[BenchRow]) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in rows], columns=COLUMNS)


def write_csv(rows: Iterable[BenchRow], stream: TextIO):
    """Write rows in the fixed CSV schema."""
    rows_to_frame(rows).to_csv(stream, index=False, float_format="%.6f")


def scaling_summary(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Per-row scaling ratios.

    Adds leaf_updates/(n log2 n), leaf_updates/n^2 and the wall time ratio
    to the previous size of the same engine.
    """
    summary = frame.copy()
    log_n = summary["n"].map(lambda n: math.log2(n) if n > 1 else 1.0)
    summary["per_nlogn"] = summary["leaf_updates"] / (summary["n"] * log_n)
    summary["per_n2"] = summary["leaf_updates"] / (summary["n"] ** 2)
    summary["time_ratio"] = summary.groupby("engine")["wall_time_s"].transform(
        lambda s: s / s.shift(1)
    )
    return summary
