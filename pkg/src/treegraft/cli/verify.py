"""Verify subcommand implementation."""

import time

from ..bench import run_verify
from .common import (
    EXIT_ERROR,
    EXIT_INTERRUPTED,
    EXIT_OK,
    banner,
    err,
    load_config,
)


def run_verify_command(args, engines=None) -> int:
    """
    Run random (t, T) pairs through every engine and the closed form.

    Prints a PASS/FAIL line to standard output; on failure the two Newick
    trees of the first counterexample follow, one per line.
    """
    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        err(f"❌ Error loading config: {e}")
        return EXIT_ERROR
    settings = config.resolve("verify", args)

    banner("Cross-engine verification")
    err(f"Trials: {settings['trials']}")
    err(f"Max leaves: {settings['max_n']}")
    err(f"Seed: {settings['seed']}")
    err(f"Workers: {settings['workers']}")

    started = time.perf_counter()
    try:
        result = run_verify(
            trials=int(settings["trials"]),
            max_n=int(settings["max_n"]),
            seed=int(settings["seed"]),
            workers=int(settings["workers"]),
            engines=engines,
        )
    except ValueError as e:
        err(f"\n❌ Error: {e}")
        return EXIT_ERROR
    except KeyboardInterrupt:
        err("\n\n⚠ Verification interrupted by user")
        return EXIT_INTERRUPTED
    elapsed = time.perf_counter() - started

    if result.passed:
        err(f"\n✓ All engines agree on {result.trials} trials ({elapsed:.1f}s)")
        print(f"PASS trials={result.trials} failures=0")
        return EXIT_OK

    example = result.counterexample
    err(f"\n❌ {result.failures} of {result.trials} trials disagree ({elapsed:.1f}s)")
    err(f"First counterexample: trial {example.trial}: {example.reason}")
    err("Replay with: treegraft refine <t.nwk> <T.nwk> --engine <name>")
    print(f"FAIL trials={result.trials} failures={result.failures}")
    print(example.t_newick)
    print(example.source_newick)
    return EXIT_ERROR
