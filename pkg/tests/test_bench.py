"""Tests for the verification and benchmark harnesses."""

import io

import pytest

from treegraft.bench import (
    check_trial,
    make_trial,
    rows_to_frame,
    run_bench,
    run_verify,
    scaling_summary,
    write_csv,
)
from treegraft.bench.verify import default_engines
from treegraft.core import parse_newick, serialize_newick, star_tree
from treegraft.engines import RefinementReport


def flatten(t, source):
    """Broken engine: throws away every cluster."""
    return star_tree(t.leaf_index), RefinementReport(engine="flatten", n=t.n_leaves)


class TestVerify:
    def test_passes(self):
        result = run_verify(trials=200, max_n=24, seed=3)
        assert result.passed
        assert result.counterexample is None

    def test_thousand_trials_up_to_64_leaves(self):
        result = run_verify(trials=1000, max_n=64)
        assert result.trials == 1000
        assert result.passed, result.counterexample

    def test_only_trivial_instances(self):
        assert run_verify(trials=50, max_n=2).passed

    def test_broken_engine_yields_counterexample(self):
        result = run_verify(
            trials=50, max_n=16, engines={"flatten": flatten}
        )
        assert not result.passed
        example = result.counterexample
        assert "flatten" in example.reason
        t = parse_newick(example.t_newick)
        source = parse_newick(example.source_newick)
        assert t.n_leaves == source.n_leaves
        assert check_trial(t, source, {"flatten": flatten}) is not None

    def test_trials_are_reproducible(self):
        first = make_trial(7, 12, 30)
        second = make_trial(7, 12, 30)
        assert [serialize_newick(x) for x in first] == [
            serialize_newick(x) for x in second
        ]

    def test_workers_do_not_change_result(self):
        single = run_verify(trials=40, max_n=12, seed=1, workers=1)
        pooled = run_verify(trials=40, max_n=12, seed=1, workers=2)
        assert (single.trials, single.failures) == (pooled.trials, pooled.failures)

    def test_check_trial_accepts_correct_engines(self):
        t = parse_newick("((a,b),c,d,e);")
        source = parse_newick("(((a,b),c),(d,e));")
        assert check_trial(t, source, default_engines()) is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"trials": 0, "max_n": 8},
            {"trials": 5, "max_n": 0},
            {"trials": 5, "max_n": 8, "workers": 2, "engines": {"flatten": flatten}},
        ],
    )
    def test_rejects_bad_arguments(self, kwargs):
        with pytest.raises(ValueError):
            run_verify(**kwargs)


class TestBench:
    def test_rows_and_bounds(self):
        rows = run_bench(sizes=[16, 64], engines=["fast", "basic"], seed=2)
        assert [(r.n, r.engine) for r in rows] == [
            (16, "fast"),
            (16, "basic"),
            (64, "fast"),
            (64, "basic"),
        ]
        assert all(r.bounds_ok for r in rows)
        assert all(r.loop_iterations <= 2 * r.leaf_updates for r in rows)

    def test_yule_target_and_repeats(self):
        rows = run_bench(
            sizes=[32], engines=["oracle", "fast"], repeats=3, target="yule"
        )
        assert len(rows) == 2
        assert all(r.bounds_ok for r in rows)

    def test_csv_schema(self):
        rows = run_bench(sizes=[8], engines=["fast"])
        stream = io.StringIO()
        write_csv(rows, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "n,engine,wall_time_s,leaf_updates,loop_iterations,bounds_ok"
        assert lines[1].startswith("8,fast,")
        assert lines[1].endswith(",True")

    def test_basic_caterpillar_summary(self):
        rows = run_bench(sizes=[128, 256], engines=["basic"], shape="caterpillar")
        summary = scaling_summary(rows_to_frame(rows))
        assert summary["per_n2"].between(0.1, 1.0).all()
        assert summary["time_ratio"].isna().iloc[0]

    def test_fast_summary_ratio(self):
        rows = run_bench(sizes=[256, 1024], engines=["fast"])
        summary = scaling_summary(rows_to_frame(rows))
        assert (summary["per_nlogn"] <= 1.0).all()

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"sizes": [64, 16], "engines": ["fast"]},
            {"sizes": [16], "engines": ["fast"], "target": "comb"},
            {"sizes": [16], "engines": ["fast"], "repeats": 0},
            {"sizes": [16], "engines": ["warp"]},
        ],
    )
    def test_rejects_bad_arguments(self, kwargs):
        with pytest.raises(ValueError):
            run_bench(**kwargs)

    @pytest.mark.slow
    def test_scaling_at_full_size(self):
        sizes = [2**10, 2**12, 2**14, 2**16]
        rows = run_bench(sizes=sizes, engines=["fast"], repeats=5)
        summary = scaling_summary(rows_to_frame(rows))
        assert summary["bounds_ok"].all()
        assert (summary["per_nlogn"] <= 1.0).all()
        # four-fold size steps; near-linearithmic growth stays well under 16x
        assert (summary["time_ratio"].dropna() <= 2.6**2).all()
