"""Data models for refinement runs."""

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import List, Optional


class EngineKind(str, Enum):
    """Refinement engines sharing one contract."""

    ORACLE = "oracle"
    BASIC = "basic"
    FAST = "fast"

    def __str__(self) -> str:
        return self.value


def leaf_update_bound(n: int) -> int:
    """Heavy-child bound on leaf additions: n * ceil(log2 n) + n."""
    if n <= 1:
        return n
    return n * math.ceil(math.log2(n)) + n


@dataclass
class RefinementReport:
    """Outcome and instrumentation of one refine() call."""

    engine: str
    n: int = 0
    attempted: int = 0
    accepted: int = 0
    inserted: int = 0
    rf_before: Optional[int] = None
    rf_after: Optional[int] = None
    leaf_updates: int = 0
    loop_iterations: int = 0
    refinement_touches: int = 0
    max_leaf_charge: Optional[int] = None

    def __repr__(self) -> str:
        return (
            f"RefinementReport(engine={self.engine}, n={self.n}, "
            f"accepted={self.accepted}/{self.attempted}, "
            f"leaf_updates={self.leaf_updates})"
        )

    @property
    def amortized_ok(self) -> bool:
        return self.loop_iterations <= 2 * self.leaf_updates

    @property
    def heavy_child_ok(self) -> bool:
        if self.engine != EngineKind.FAST.value:
            return True
        if self.leaf_updates > leaf_update_bound(self.n):
            return False
        if self.max_leaf_charge is not None and self.n > 1:
            return self.max_leaf_charge <= int(math.log2(self.n)) + 1
        return True

    def bounds_ok(self) -> bool:
        """Amortized counter bound, plus the heavy-child bound for 'fast'."""
        return self.amortized_ok and self.heavy_child_ok

    def as_lines(self) -> List[str]:
        """key=value lines, None values omitted."""
        return [f"{k}={v}" for k, v in asdict(self).items() if v is not None]
