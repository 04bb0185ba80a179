"""Bench subcommand implementation."""

import sys

from ..bench import rows_to_frame, run_bench, scaling_summary, write_csv
from ..core import GenSpecError
from .common import (
    EXIT_ERROR,
    EXIT_INTERRUPTED,
    EXIT_OK,
    banner,
    err,
    load_config,
)


def run_bench_command(args) -> int:
    """Write one CSV row per (size, engine) and a scaling summary to stderr."""
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        err(f"❌ Error loading config: {e}")
        return EXIT_ERROR
    settings = config.resolve("bench", args)

    banner("Refinement benchmark")
    err(f"Sizes: {', '.join(str(n) for n in settings['sizes'])}")
    err(f"Engines: {', '.join(settings['engines'])}")
    err(f"Source shape: {settings['shape']}, target: {settings['target']}")
    err(f"Seed: {settings['seed']}, repeats: {settings['repeats']}")

    try:
        rows = run_bench(
            sizes=[int(n) for n in settings["sizes"]],
            engines=settings["engines"],
            seed=int(settings["seed"]),
            repeats=int(settings["repeats"]),
            shape=settings["shape"],
            target=settings["target"],
        )
    except (GenSpecError, ValueError) as e:
        err(f"\n❌ Error: {e}")
        return EXIT_ERROR
    except KeyboardInterrupt:
        err("\n\n⚠ Benchmark interrupted by user")
        return EXIT_INTERRUPTED

    write_csv(rows, sys.stdout)

    summary = scaling_summary(rows_to_frame(rows))
    err("\n" + summary.to_string(index=False, float_format=lambda x: f"{x:.4f}"))
    violations = int((~summary["bounds_ok"].astype(bool)).sum())
    if violations:
        err(f"\n❌ {violations} row(s) violate a work bound")
    else:
        err("\n✓ All rows within the work bounds")
    return EXIT_OK
