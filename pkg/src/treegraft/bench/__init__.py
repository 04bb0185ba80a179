"""Verification and benchmark harnesses."""

from .harness import BenchRow, rows_to_frame, run_bench, scaling_summary, write_csv
from .verify import Counterexample, VerifyResult, check_trial, make_trial, run_verify

__all__ = [
    "BenchRow",
    "Counterexample",
    "VerifyResult",
    "check_trial",
    "make_trial",
    "rows_to_frame",
    "run_bench",
    "run_verify",
    "scaling_summary",
    "write_csv",
]
