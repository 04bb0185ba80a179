"""Gen subcommand implementation."""

from ..core import GenSpec, GenSpecError, generate_tree, serialize_newick
from .common import EXIT_ERROR, EXIT_OK, err, load_config


def run_gen(args) -> int:
    """Write one generated tree as Newick to standard output."""
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        err(f"❌ Error loading config: {e}")
        return EXIT_ERROR
    settings = config.resolve("gen", args)

    try:
        spec = GenSpec(
            leaves=args.leaves,
            seed=args.seed,
            shape=settings["shape"],
            contraction_prob=float(settings["contraction_prob"]),
        )
        tree = generate_tree(spec)
    except GenSpecError as e:
        err(f"❌ Error: {e}")
        return EXIT_ERROR

    print(serialize_newick(tree, canonical=args.canonical))
    return EXIT_OK
