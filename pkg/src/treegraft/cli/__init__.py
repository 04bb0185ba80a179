"""Command-line interface for treegraft."""

import argparse
import sys

from ..core.generate import SHAPES
from ..engines import EngineKind
from .common import EXIT_INTERRUPTED, configure_logging, int_list, name_list


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treegraft",
        description="Refine a rooted tree with the compatible clusters of another",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Write debug logging to stderr",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Refine subcommand
    refine_parser = subparsers.add_parser(
        "refine",
        help="Insert every compatible cluster of T into t",
    )
    refine_parser.add_argument("t_path", help="Newick file holding the tree t")
    refine_parser.add_argument("source_path", help="Newick file holding the tree T")
    refine_parser.add_argument(
        "--engine",
        choices=[k.value for k in EngineKind],
        default=EngineKind.FAST.value,
        help="Refinement engine (default: fast)",
    )
    refine_parser.add_argument(
        "--report",
        action="store_true",
        help="Write the refinement report to stderr",
    )
    refine_parser.add_argument(
        "--canonical",
        action="store_true",
        help="Sort children by their smallest label before writing",
    )

    # RF subcommand
    rf_parser = subparsers.add_parser(
        "rf",
        help="Robinson-Foulds distance between two trees",
    )
    rf_parser.add_argument("a_path", help="Newick file holding the first tree")
    rf_parser.add_argument("b_path", help="Newick file holding the second tree")
    rf_parser.add_argument(
        "--symmetric",
        action="store_true",
        help="Count clusters missing on either side (default: first tree only)",
    )

    # Gen subcommand
    gen_parser = subparsers.add_parser("gen", help="Generate a random Newick tree")
    gen_parser.add_argument(
        "--leaves",
        type=int,
        required=True,
        help="Number of leaves",
    )
    gen_parser.add_argument("--seed", type=int, default=0, help="Seed (default: 0)")
    gen_parser.add_argument(
        "--shape",
        choices=SHAPES,
        help="Tree shape (default from config: yule)",
    )
    gen_parser.add_argument(
        "--contract",
        dest="contraction_prob",
        type=float,
        help="Probability of contracting each internal edge (default: 0.0)",
    )
    gen_parser.add_argument(
        "--canonical",
        action="store_true",
        help="Sort children by their smallest label before writing",
    )
    gen_parser.add_argument("--config", help="Path to treegraft YAML config")

    # Verify subcommand
    verify_parser = subparsers.add_parser(
        "verify",
        help="Cross-check all engines on random tree pairs",
    )
    verify_parser.add_argument("--trials", type=int, help="Number of random pairs")
    verify_parser.add_argument(
        "--max-n",
        dest="max_n",
        type=int,
        help="Largest leaf count drawn",
    )
    verify_parser.add_argument("--seed", type=int, help="Base seed")
    verify_parser.add_argument(
        "--workers",
        type=int,
        help="Worker processes (results do not depend on it)",
    )
    verify_parser.add_argument("--config", help="Path to treegraft YAML config")

    # Bench subcommand
    bench_parser = subparsers.add_parser(
        "bench",
        help="Time the engines and check their work bounds",
    )
    bench_parser.add_argument(
        "--sizes",
        type=int_list,
        help="Comma-separated leaf counts, ascending",
    )
    bench_parser.add_argument(
        "--engines",
        type=name_list,
        help="Comma-separated engine names",
    )
    bench_parser.add_argument("--seed", type=int, help="Base seed")
    bench_parser.add_argument(
        "--repeats",
        type=int,
        help="Seeds averaged per (size, engine)",
    )
    bench_parser.add_argument(
        "--shape",
        choices=SHAPES,
        help="Shape of the source tree T",
    )
    bench_parser.add_argument(
        "--target",
        choices=["star", "yule"],
        help="Tree being refined",
    )
    bench_parser.add_argument("--config", help="Path to treegraft YAML config")

    return parser


def main(argv=None):
    """Main CLI entry point with subcommands."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        sys.exit(1)

    configure_logging(args.verbose)

    try:
        if args.command == "refine":
            from .refine import run_refine

            code = run_refine(args)
        elif args.command == "rf":
            from .rf import run_rf

            code = run_rf(args)
        elif args.command == "gen":
            from .gen import run_gen

            code = run_gen(args)
        elif args.command == "verify":
            from .verify import run_verify_command

            code = run_verify_command(args)
        else:
            from .bench import run_bench_command

            code = run_bench_command(args)
    except KeyboardInterrupt:
        print("\n⚠ Interrupted by user", file=sys.stderr)
        code = EXIT_INTERRUPTED

    sys.exit(code)


if __name__ == "__main__":
    main()
