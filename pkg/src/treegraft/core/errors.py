"""Exception hierarchy for treegraft."""


class TreegraftError(Exception):
    """Base class for all treegraft errors."""


class NewickError(TreegraftError, ValueError):
    """Newick text could not be turned into a tree."""


class MalformedNewickError(NewickError):
    """Unbalanced, garbled or truncated Newick text."""

    def __init__(self, message: str, position: int = -1):
        if position >= 0:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class DuplicateLeafLabelError(NewickError):
    """Two leaves of one tree carry the same label."""

    def __init__(self, label: str):
        super().__init__(f"Duplicate leaf label: {label!r}")
        self.label = label


class UnlabeledLeafError(NewickError):
    """A leaf without a label."""


class EmptyTreeError(NewickError):
    """Input holds no tree at all."""


class LeafSetMismatchError(TreegraftError, ValueError):
    """Two trees that must share a leaf set do not."""

    def __init__(self, only_left, only_right):
        only_left = sorted(only_left)
        only_right = sorted(only_right)
        super().__init__(
            "Leaf sets differ: "
            f"{len(only_left)} only in first tree {only_left[:5]}, "
            f"{len(only_right)} only in second tree {only_right[:5]}"
        )
        self.only_left = only_left
        self.only_right = only_right


class UnknownTaxonError(TreegraftError, KeyError):
    """A taxon label or id that the tree does not contain."""

    def __init__(self, taxon):
        super().__init__(f"Unknown taxon: {taxon!r}")
        self.taxon = taxon

    def __str__(self):
        return self.args[0]


class InvalidTreeError(TreegraftError, ValueError):
    """A tree violates a structural invariant."""


class CounterError(TreegraftError, RuntimeError):
    """Leaf-counter machinery misuse or internal inconsistency."""


class LeafAlreadyAddedError(CounterError):
    """A leaf was added twice within one accumulation."""

    def __init__(self, label):
        super().__init__(f"Leaf already added since last clear: {label!r}")
        self.label = label


class InconsistentPropagationError(CounterError):
    """Propagated children of z do not add up to the cluster size."""


class GenSpecError(TreegraftError, ValueError):
    """Invalid random tree generation request."""
