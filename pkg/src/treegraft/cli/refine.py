"""Refine subcommand implementation."""

from ..core import LeafSetMismatchError, NewickError, serialize_newick
from ..engines import refine
from .common import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, err, read_first_tree


def run_refine(args) -> int:
    """
    Refine the tree in ``args.t_path`` with the clusters of ``args.source_path``.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code: 0 success, 1 unreadable input, 2 leaf-set mismatch
    """
    try:
        t = read_first_tree(args.t_path)
        source = read_first_tree(args.source_path)
    except (OSError, NewickError) as e:
        err(f"❌ Error: {e}")
        return EXIT_ERROR

    try:
        result, report = refine(t, source, args.engine, measure_rf=args.report)
    except LeafSetMismatchError as e:
        err(f"❌ Error: {e}")
        return EXIT_MISMATCH

    print(serialize_newick(result, canonical=args.canonical))
    if args.report:
        for line in report.as_lines():
            err(line)
    return EXIT_OK
