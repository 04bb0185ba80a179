"""Helpers shared by the subcommands."""

import logging
import sys
from pathlib import Path
from typing import List, Optional

from ..core import Config, Tree, read_newick_file

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_INTERRUPTED = 130


def err(*parts):
    """Print to standard error; standard output is reserved for results."""
    print(*parts, file=sys.stderr)


def banner(title: str):
    err("=" * 60)
    err(title)
    err("=" * 60)


def configure_logging(verbose: bool):
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )


def read_first_tree(path: str) -> Tree:
    """
    Load the first tree of a Newick file.

    Raises:
        FileNotFoundError: path does not exist
        NewickError: the file does not hold a valid tree
    """
    if not Path(path).exists():
        raise FileNotFoundError(f"Newick file not found: {path}")
    return read_newick_file(path)[0]


def load_config(path: Optional[str]) -> Config:
    """
    Config from ``path``, or defaults when no path is given.

    Raises:
        FileNotFoundError: path given but missing
        ValueError: invalid YAML
    """
    if path is None:
        return Config()
    return Config(path)


def int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]
