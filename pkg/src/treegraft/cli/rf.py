"""RF distance subcommand implementation."""

from ..core import LeafSetMismatchError, NewickError, rf_distance
from .common import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, err, read_first_tree


def run_rf(args) -> int:
    """Print the RF distance between two trees (one-sided unless --symmetric)."""
    try:
        a = read_first_tree(args.a_path)
        b = read_first_tree(args.b_path)
    except (OSError, NewickError) as e:
        err(f"❌ Error: {e}")
        return EXIT_ERROR

    try:
        distance = rf_distance(a, b, symmetric=args.symmetric)
    except LeafSetMismatchError as e:
        err(f"❌ Error: {e}")
        return EXIT_MISMATCH

    print(distance)
    return EXIT_OK
