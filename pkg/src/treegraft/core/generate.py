"""Seeded random tree generation for tests, verification and benchmarks."""

import random
from dataclasses import dataclass
from typing import List, Optional

from .errors import GenSpecError
from .tree import Tree

SHAPES = ("yule", "uniform", "caterpillar", "balanced")
RANDOM_SHAPES = ("yule", "uniform")


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one random tree; same recipe, same tree."""

    leaves: int
    seed: int = 0
    shape: str = "yule"
    contraction_prob: float = 0.0
    shuffle_labels: Optional[bool] = None

    def validate(self) -> "GenSpec":
        if self.leaves < 1:
            raise GenSpecError(f"leaves must be at least 1, got {self.leaves}")
        if self.shape not in SHAPES:
            raise GenSpecError(
                f"Unknown shape: {self.shape}. Valid options: {', '.join(SHAPES)}"
            )
        if not 0.0 <= self.contraction_prob <= 1.0:
            raise GenSpecError(
                f"contraction_prob must be in [0, 1], got {self.contraction_prob}"
            )
        if not -(2**63) <= self.seed < 2**64:
            raise GenSpecError(f"seed must fit in 64 bits, got {self.seed}")
        return self

    @property
    def shuffles(self) -> bool:
        if self.shuffle_labels is None:
            return self.shape in RANDOM_SHAPES
        return self.shuffle_labels


def _yule(n: int, rng: random.Random) -> List[List[int]]:
    # split a uniformly chosen leaf until n leaves exist
    children: List[List[int]] = [[]]
    leaves = [0]
    for _ in range(n - 1):
        k = rng.randrange(len(leaves))
        x = leaves[k]
        a, b = len(children), len(children) + 1
        children.extend(([], []))
        children[x] = [a, b]
        leaves[k] = a
        leaves.append(b)
    return children


def _uniform(n: int, rng: random.Random) -> List[List[int]]:
    # attach each new leaf to a uniformly chosen edge, the root edge included
    children: List[List[int]] = [[]]
    parent: List[Optional[int]] = [None]
    root = 0
    for _ in range(n - 1):
        v = rng.randrange(len(children))
        w, leaf = len(children), len(children) + 1
        children.extend(([], []))
        parent.extend((parent[v], w))
        p = parent[v]
        if p is None:
            root = w
        else:
            siblings = children[p]
            siblings[siblings.index(v)] = w
        children[w] = [v, leaf] if rng.random() < 0.5 else [leaf, v]
        parent[v] = w
    return _reroot_at_zero(children, root)


def _reroot_at_zero(children: List[List[int]], root: int) -> List[List[int]]:
    if root == 0:
        return children
    # swap ids 0 and root so the root is always node 0
    swap = {0: root, root: 0}
    relabeled = [[] for _ in children]
    for v, kids in enumerate(children):
        relabeled[swap.get(v, v)] = [swap.get(c, c) for c in kids]
    return relabeled


def _caterpillar(n: int) -> List[List[int]]:
    children: List[List[int]] = [[]]
    current = 0
    for _ in range(n - 1):
        leaf = len(children)
        top = leaf + 1
        children.extend(([], [current, leaf]))
        current = top
    return _reroot_at_zero(children, current)


def _balanced(n: int) -> List[List[int]]:
    children: List[List[int]] = [[]]
    stack = [(0, n)]
    while stack:
        v, count = stack.pop()
        if count == 1:
            continue
        left = (count + 1) // 2
        a, b = len(children), len(children) + 1
        children.extend(([], []))
        children[v] = [a, b]
        stack.append((b, count - left))
        stack.append((a, left))
    return children


def generate_tree(spec: GenSpec) -> Tree:
    """
    Build the tree described by ``spec``; labels are t1..tN.

    Raises:
        GenSpecError: the spec is invalid
    """
    spec.validate()
    rng = random.Random(spec.seed)
    n = spec.leaves

    if spec.shape == "yule":
        shape = _yule(n, rng)
    elif spec.shape == "uniform":
        shape = _uniform(n, rng)
    elif spec.shape == "caterpillar":
        shape = _caterpillar(n)
    else:
        shape = _balanced(n)

    labels = [f"t{i}" for i in range(1, n + 1)]
    if spec.shuffles:
        rng.shuffle(labels)
    next_label = iter(labels)

    tree = Tree()
    stack = [(0, None)]
    while stack:
        v, parent = stack.pop()
        kids = shape[v]
        if not kids:
            tree.add_node(parent, next(next_label))
            continue
        if parent is not None and spec.contraction_prob > 0.0:
            if rng.random() < spec.contraction_prob:
                # contracted: children hang directly off the current parent
                stack.extend((c, parent) for c in reversed(kids))
                continue
        node = tree.add_node(parent)
        stack.extend((c, node) for c in reversed(kids))
    return tree.finalize()
