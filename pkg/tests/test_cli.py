"""End-to-end tests of the treegraft command line."""

import logging
from argparse import Namespace

import pytest

from treegraft.cli import main
from treegraft.cli.verify import run_verify_command
from treegraft.core import star_tree
from treegraft.engines import RefinementReport


def run(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    return exc.value.code


class TestRefine:
    def test_refines_star(self, write_newick, capsys):
        t = write_newick("t.nwk", "(a,b,c,d);")
        source = write_newick("s.nwk", "((c,d),(a,b));")
        assert run(["refine", t, source, "--canonical"]) == 0
        out = capsys.readouterr()
        assert out.out == "((a,b),(c,d));\n"
        assert out.err == ""

    @pytest.mark.parametrize("engine", ["oracle", "basic", "fast"])
    def test_report_on_stderr(self, write_newick, capsys, engine):
        t = write_newick("t.nwk", "((a,b),c,d);")
        assert run(["refine", t, t, "--engine", engine, "--report"]) == 0
        out = capsys.readouterr()
        assert out.out == "((a,b),c,d);\n"
        lines = out.err.splitlines()
        assert f"engine={engine}" in lines
        assert "rf_after=0" in lines
        assert "attempted=1" in lines

    def test_mismatch_exit_code(self, write_newick, capsys):
        t = write_newick("t.nwk", "(a,b,c);")
        source = write_newick("s.nwk", "((a,b),x);")
        assert run(["refine", t, source]) == 2
        out = capsys.readouterr()
        assert out.out == ""
        assert "Leaf sets differ" in out.err

    def test_parse_error_exit_code(self, write_newick, capsys):
        t = write_newick("t.nwk", "(a,b,c;")
        source = write_newick("s.nwk", "(a,b,c);")
        assert run(["refine", t, source]) == 1
        assert capsys.readouterr().out == ""

    def test_missing_file(self, tmp_path, write_newick):
        source = write_newick("s.nwk", "(a,b,c);")
        assert run(["refine", str(tmp_path / "nope.nwk"), source]) == 1

    def test_invalid_utf8_file(self, tmp_path, write_newick, capsys):
        bad = tmp_path / "bad.nwk"
        bad.write_bytes(b"(a,b,\xff);\n")
        source = write_newick("s.nwk", "(a,b,c);")
        assert run(["refine", str(bad), source]) == 1
        out = capsys.readouterr()
        assert out.out == ""
        assert "❌" in out.err
        assert "offset 5" in out.err
        assert "Traceback" not in out.err

    def test_uses_first_tree_of_file(self, write_newick, capsys):
        t = write_newick("t.nwk", "(a,b,c);\n((a,b),c);")
        source = write_newick("s.nwk", "((b,c),a);")
        assert run(["refine", t, source, "--canonical"]) == 0
        assert capsys.readouterr().out == "(a,(b,c));\n"


class TestRF:
    def test_one_sided_and_symmetric(self, write_newick, capsys):
        a = write_newick("a.nwk", "((a,b),c,d);")
        b = write_newick("b.nwk", "((c,d),a,b);")
        assert run(["rf", a, b]) == 0
        assert capsys.readouterr().out == "1\n"
        assert run(["rf", a, b, "--symmetric"]) == 0
        assert capsys.readouterr().out == "2\n"

    def test_star_direction(self, write_newick, capsys):
        star = write_newick("star.nwk", "(a,b,c,d);")
        binary = write_newick("bin.nwk", "(((a,b),c),d);")
        run(["rf", star, binary])
        assert capsys.readouterr().out == "0\n"
        run(["rf", binary, star])
        assert capsys.readouterr().out == "2\n"

    def test_mismatch(self, write_newick):
        a = write_newick("a.nwk", "(a,b);")
        b = write_newick("b.nwk", "(a,c);")
        assert run(["rf", a, b]) == 2


class TestGen:
    def test_single_leaf(self, capsys):
        assert run(["gen", "--leaves", "1"]) == 0
        assert capsys.readouterr().out == "t1;\n"

    def test_caterpillar(self, capsys):
        argv = ["gen", "--leaves", "4", "--shape", "caterpillar", "--canonical"]
        assert run(argv) == 0
        assert capsys.readouterr().out == "(((t1,t2),t3),t4);\n"

    def test_same_seed_same_bytes(self, capsys):
        run(["gen", "--leaves", "30", "--seed", "9", "--contract", "0.3"])
        first = capsys.readouterr().out
        run(["gen", "--leaves", "30", "--seed", "9", "--contract", "0.3"])
        assert capsys.readouterr().out == first

    def test_shape_from_config(self, tmp_path, capsys):
        config = tmp_path / "cfg.yaml"
        config.write_text("gen:\n  shape: caterpillar\n")
        run(["gen", "--leaves", "4", "--canonical", "--config", str(config)])
        assert capsys.readouterr().out == "(((t1,t2),t3),t4);\n"

    def test_invalid_spec(self, capsys):
        assert run(["gen", "--leaves", "0"]) == 1
        assert "leaves must be at least 1" in capsys.readouterr().err


class TestVerify:
    def test_pass(self, capsys):
        assert run(["verify", "--trials", "30", "--max-n", "12", "--seed", "4"]) == 0
        assert capsys.readouterr().out.startswith("PASS trials=30")

    def test_trivial_sizes(self, capsys):
        assert run(["verify", "--trials", "10", "--max-n", "2"]) == 0

    def test_broken_engine_prints_counterexample(self, capsys):
        def flatten(t, source):
            return star_tree(t.leaf_index), RefinementReport(engine="flatten")

        args = Namespace(
            config=None, trials=50, max_n=16, seed=0, workers=None
        )
        assert run_verify_command(args, engines={"flatten": flatten}) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("FAIL trials=50")
        assert len(lines) == 3
        assert all(line.endswith(";") for line in lines[1:])


class TestBench:
    def test_csv_on_stdout(self, capsys):
        argv = ["bench", "--sizes", "16,32", "--engines", "fast,basic", "--seed", "1"]
        assert run(argv) == 0
        out = capsys.readouterr()
        lines = out.out.splitlines()
        assert lines[0] == "n,engine,wall_time_s,leaf_updates,loop_iterations,bounds_ok"
        assert len(lines) == 5
        assert "per_nlogn" in out.err

    def test_descending_sizes_rejected(self, capsys):
        assert run(["bench", "--sizes", "32,16", "--engines", "fast"]) == 1


def test_no_command_prints_help(capsys):
    assert run([]) == 1
    assert "usage" in capsys.readouterr().out


def test_verbose_installs_logging(write_newick, capsys, monkeypatch):
    calls = []
    monkeypatch.setattr(logging, "basicConfig", lambda **kw: calls.append(kw))
    t = write_newick("t.nwk", "(a,b,c,d);")
    source = write_newick("s.nwk", "((a,b),c,d);")
    assert run(["-v", "refine", t, source, "--canonical"]) == 0
    assert capsys.readouterr().out == "((a,b),c,d);\n"
    assert calls and calls[0]["level"] == logging.DEBUG
