"""Newick reading and writing (topology only)."""

import re
from pathlib import Path
from typing import Dict, List, Union

from .errors import EmptyTreeError, MalformedNewickError, UnlabeledLeafError
from .tree import Tree

LABEL_RE = re.compile(r"[A-Za-z0-9_.\-]+\Z")

# punctuation, or a run of label/number characters; anything else is garbage
_TOKEN_RE = re.compile(r"\s*(?:([(),;:])|([A-Za-z0-9_.\-+]+))")


def _tokenize(text: str):
    position = 0
    tokens = []
    end = len(text.rstrip())
    while position < end:
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise MalformedNewickError(
                f"Unexpected character {text[position]!r}", position
            )
        tokens.append((match.group(1) or match.group(2), match.start(match.lastindex)))
        position = match.end()
    return tokens


def parse_newick(doc: str) -> Tree:
    """
    Parse one Newick tree.

    Branch lengths and internal node labels are accepted and dropped; leaf
    order is kept as written.

    Raises:
        EmptyTreeError: blank input or a bare ';'
        MalformedNewickError: text outside the supported grammar
        UnlabeledLeafError: a leaf without a label, e.g. '(a,);'
        DuplicateLeafLabelError: two leaves with the same label
    """
    tokens = _tokenize(doc)
    if not tokens or tokens[0][0] == ";":
        raise EmptyTreeError("No tree found in Newick input")

    tree = Tree()
    open_groups: List[int] = []
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def skip_branch_length():
        nonlocal i
        if peek() != ":":
            return
        i += 1
        if i >= len(tokens):
            raise MalformedNewickError("Missing branch length after ':'", len(doc))
        value, position = tokens[i]
        try:
            float(value)
        except ValueError:
            raise MalformedNewickError(
                f"Invalid branch length {value!r}", position
            ) from None
        i += 1

    expect_subtree = True
    while True:
        if i >= len(tokens):
            raise MalformedNewickError("Missing ';' terminator", len(doc))
        token, position = tokens[i]
        parent = open_groups[-1] if open_groups else None

        if expect_subtree:
            if token == "(":
                open_groups.append(tree.add_node(parent))
                i += 1
                continue
            if token in (",", ")", ";", ":"):
                raise UnlabeledLeafError(f"Leaf without a label at offset {position}")
            if not LABEL_RE.match(token):
                raise MalformedNewickError(f"Invalid leaf label {token!r}", position)
            if parent is None and tree.root is not None:
                raise MalformedNewickError("Text after the root subtree", position)
            tree.add_node(parent, token)
            i += 1
            skip_branch_length()
            expect_subtree = False
            continue

        if token == ",":
            if parent is None:
                raise MalformedNewickError("',' outside of parentheses", position)
            expect_subtree = True
            i += 1
        elif token == ")":
            if parent is None:
                raise MalformedNewickError("Unbalanced ')'", position)
            if tree.degree(parent) < 2:
                raise MalformedNewickError(
                    "Group with a single subtree", position
                )
            open_groups.pop()
            i += 1
            if peek() not in (None, ",", ")", ";", ":", "("):
                i += 1  # internal node label, discarded
            skip_branch_length()
        elif token == ";":
            if open_groups:
                raise MalformedNewickError("Unbalanced '('", position)
            if i != len(tokens) - 1:
                raise MalformedNewickError(
                    "Text after ';' terminator", tokens[i + 1][1]
                )
            break
        else:
            raise MalformedNewickError(f"Unexpected token {token!r}", position)

    return tree.finalize()


def read_newick_file(path: Union[str, Path]) -> List[Tree]:
    """Parse every nonblank line of a Newick file as its own tree."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise MalformedNewickError(f"Invalid UTF-8 in {path}", e.start) from None
    trees = [parse_newick(line) for line in text.splitlines() if line.strip()]
    if not trees:
        raise EmptyTreeError(f"No tree found in {path}")
    return trees


def _smallest_labels(tree: Tree) -> Dict[int, str]:
    nodes = tree.nodes
    smallest = {}
    for v in tree.postorder():
        kids = nodes[v].children
        smallest[v] = min(smallest[c] for c in kids) if kids else nodes[v].label
    return smallest


def serialize_newick(tree: Tree, canonical: bool = False) -> str:
    """
    Write ``tree`` as Newick without branch lengths.

    Children come out in stored order, or ordered by their smallest
    descendant label when ``canonical`` is set.
    """
    nodes = tree.nodes
    smallest = _smallest_labels(tree) if canonical else None
    parts = []
    stack = [tree.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        node = nodes[item]
        if not node.children:
            parts.append(node.label)
            continue
        kids = node.children
        if canonical:
            kids = sorted(kids, key=smallest.__getitem__)
        parts.append("(")
        stack.append(")")
        for k, c in enumerate(reversed(kids)):
            stack.append(c)
            if k < len(kids) - 1:
                stack.append(",")
    return "".join(parts) + ";"
