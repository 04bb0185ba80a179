"""Shared fixtures for the treegraft test suite."""

import os
import random

import pytest

from treegraft.core import GenSpec, generate_tree, parse_newick


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: large scaling runs, enabled with TREEGRAFT_SLOW=1"
    )


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TREEGRAFT_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set TREEGRAFT_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def nwk():
    """Parse a Newick string; shorthand for inline test trees."""
    return parse_newick


@pytest.fixture
def write_newick(tmp_path):
    """Write Newick text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text + "\n", encoding="utf-8")
        return str(path)

    return _write


def random_tree(rng: random.Random, n: int, contraction_prob=None):
    """Random Yule or uniform tree on t1..tN, multifurcating at random."""
    if contraction_prob is None:
        contraction_prob = rng.choice((0.0, 0.0, 0.3, 0.7))
    return generate_tree(
        GenSpec(
            leaves=n,
            seed=rng.getrandbits(32),
            shape=rng.choice(("yule", "uniform")),
            contraction_prob=contraction_prob,
            shuffle_labels=True,
        )
    )


@pytest.fixture
def random_pairs():
    """Seeded (t, source) pairs over a shared leaf set, n drawn from 2..max_n."""

    def _pairs(count: int, max_n: int = 32, seed: int = 0):
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.randint(2, max_n)
            yield random_tree(rng, n), random_tree(rng, n)

    return _pairs


@pytest.fixture
def make_random_tree():
    return random_tree
