import io
import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from coindex import cli
from coindex.io import (
    DataError,
    read_collection,
    read_function,
    read_pgm,
    write_collection,
    write_function,
    write_pgm,
)
from coindex.mfields import MFunction, discretize, synthetic_image

GOLDEN = Path(__file__).parent / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return path


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["index", "--kind", "jaccard", "fig1_a.json", "fig1_b.json"], "index_jaccard.stdout"),
        (["chain", "chain_a.json", "chain_b.json", "chain_c.json"], "chain.stdout"),
        (["index", "--kind", "jaccard", "empty.json", "empty.json"], "index_empty.stdout"),
    ],
)
def test_golden(argv, golden):
    argv = [str(GOLDEN / a) if a.endswith(".json") else a for a in argv]
    code, out, _ = run(argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "coindex.cli", "index", "--kind", "jaccard",
         str(GOLDEN / "fig1_a.json"), str(GOLDEN / "fig1_b.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0.428571\n"


@pytest.mark.parametrize(
    "kind, extra, expected",
    [
        ("distance", [], "0.571429"),
        ("power", ["--p", "2"], "1.285714"),
        ("interiority", [], "0.600000"),
        ("coincidence", [], "0.507093"),
        ("multiset", [], "0.428571"),
        ("additive", [], "0.600000"),
    ],
)
def test_index_kinds(kind, extra, expected):
    code, out, _ = run(["index", "--kind", kind, *extra, GOLDEN / "fig1_a.json", GOLDEN / "fig1_b.json"])
    assert code == 0
    assert out.strip() == expected


def test_multiset_and_weighted(tmp_path):
    a = write_json(tmp_path / "a.json", {"kind": "multiset", "multiplicities": {"a": 3, "b": 2}})
    b = write_json(tmp_path / "b.json", {"kind": "multiset", "multiplicities": {"a": 2, "b": 1, "c": 2, "d": 1}})
    assert run(["index", "--kind", "multiset", a, b])[1] == "0.375000\n"
    wa = write_json(tmp_path / "wa.json", {"kind": "weighted", "weights": {"a": 2, "b": 5, "c": 1}})
    wb = write_json(tmp_path / "wb.json", {"kind": "weighted", "weights": {"b": 5, "e": 1, "f": 1}})
    assert run(["index", "--kind", "weighted", wa, wb])[1] == "0.500000\n"
    assert run(["index", "--kind", "weighted", a, wb])[0] == cli.DATA_ERROR


def test_matrix(tmp_path):
    (tmp_path / "a.csv").write_text("1,2\n0,1\n")
    (tmp_path / "b.csv").write_text("2,1\n1,1\n")
    code, out, _ = run(["index", "--kind", "matrix", tmp_path / "a.csv", tmp_path / "b.csv"])
    assert (code, out) == (0, "0.500000\n")


def test_expr(tmp_path):
    env = write_json(tmp_path / "env.json", {"C": [1, 2, 3, 4], "D": [2, 3, 5], "E": [7, 8], "F": [3, 8], "G": [1, 9]})
    code, out, _ = run(["expr", "((C & D) | E) - F", "C | G", "--env", env])
    # {2, 7} vs {1, 2, 3, 4, 9}
    assert (code, out) == (0, "0.166667\n")
    code, _, err = run(["expr", "C & (D", "C", "--env", env])
    assert code == cli.DATA_ERROR and "position" in err
    code, _, err = run(["expr", "Q", "C", "--env", env])
    assert code == cli.DATA_ERROR and "unbound" in err


def test_chain_tau_and_nary():
    paths = [GOLDEN / f"chain_{c}.json" for c in "abc"]
    assert run(["chain", *paths, "--tau", "0.3"])[1] == "0.000000\n"
    assert run(["nary", "--kind", "j3", *paths])[1] == "0.000000\n"
    same = [GOLDEN / "fig1_a.json"] * 3
    for k in ("j3", "i3", "c3"):
        assert run(["nary", "--kind", k, *same])[1] == "1.000000\n"


def test_usage_errors():
    assert run(["bogus"])[0] == cli.USAGE_ERROR
    assert run(["index", "--kind", "nope", "a", "b"])[0] == cli.USAGE_ERROR
    code, _, err = run(["index", "--unknown"])
    assert code == cli.USAGE_ERROR and "usage" in err


def test_help_lists_everything():
    code, out, _ = run(["--help"])
    assert code == 0
    for name in ("index", "expr", "chain", "nary", "grid", "slices", "density", "mconv", "image", "sweep", "clustersep"):
        assert name in out


def test_data_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "set",\n "elements": [1,}')
    code, _, err = run(["index", "--kind", "jaccard", bad, bad])
    assert code == cli.DATA_ERROR
    assert f"{bad}:2" in err
    assert run(["index", "--kind", "jaccard", tmp_path / "missing.json", bad])[0] == cli.DATA_ERROR


def test_grid_and_slices_roundtrip(tmp_path):
    out = tmp_path / "field.csv"
    assert run(["grid", "--index", "coincidence", "--a", 50, "--nx", 20, "--nr", 10, "--out", out])[0] == 0
    rows = np.loadtxt(out, delimiter=",", skiprows=1)
    assert out.read_text().splitlines()[0] == "x,r,value"
    assert rows.shape == (200, 3)
    assert rows[:, 2].min() >= 0 and rows[:, 2].max() <= 1
    out = tmp_path / "slices.csv"
    assert run(["slices", "--index", "additive_jaccard", "--b", "10,50", "--nx", 11, "--out", out])[0] == 0
    assert out.read_text().splitlines()[0] == "b,x,value"
    assert np.loadtxt(out, delimiter=",", skiprows=1).shape == (22, 3)


def test_density_and_scatter(tmp_path):
    n = 2**12
    write_function(tmp_path / "f.csv", discretize(np.cos, 0, 2 * np.pi, n))
    write_function(tmp_path / "g.csv", discretize(np.cos, 0, 2 * np.pi, n).scaled(-1))
    code, out, _ = run(["density", tmp_path / "f.csv", tmp_path / "g.csv", "--scatter", tmp_path / "s.csv"])
    assert (code, out) == (0, "-1.000000\n")
    lines = (tmp_path / "s.csv").read_text().splitlines()
    assert lines[0] == "mA,mB,region" and len(lines) == n + 1


def test_mconv(tmp_path):
    x = np.zeros(101)
    x[40:61] = 1
    write_function(tmp_path / "p.csv", MFunction(x, 0.5))
    code, out, _ = run(["mconv", tmp_path / "p.csv", tmp_path / "p.csv", "--lags=-5,5", "--out", tmp_path / "m.csv"])
    assert (code, out) == (0, "0.000000\n")
    f = read_function(tmp_path / "m.csv")
    assert f.samples.size == 21 and f.samples.max() == 1.0


def test_image_and_pgm(tmp_path):
    write_pgm(tmp_path / "img.pgm", synthetic_image(16))
    code, out, _ = run(["image", tmp_path / "img.pgm", "--amplitude", 0, "--out", tmp_path / "n.pgm"])
    assert (code, out) == (0, "1.000000\n")
    assert read_pgm(tmp_path / "n.pgm").samples.shape == (16, 16)
    code, out, _ = run(["image", "--amplitude", 0.5, "--seed", 0])
    assert code == 0 and float(out) < 1


def test_sweep_deterministic(tmp_path):
    argv = ["sweep", "--rhos", "0,0.5,0.9", "--n", 500, "--seed", 7]
    run([*argv, "--out", tmp_path / "a.csv"])
    run([*argv, "--out", tmp_path / "b.csv"])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert len((tmp_path / "a.csv").read_text().splitlines()) == 4


def test_corr_and_clustersep(tmp_path):
    rng = np.random.default_rng(0)
    x = rng.normal(size=200)
    np.savetxt(tmp_path / "pairs.csv", np.c_[x, x], delimiter=",")
    assert run(["corr", tmp_path / "pairs.csv"])[1] == "1.000000 1.000000\n"
    np.savetxt(tmp_path / "a.csv", rng.normal(size=(100, 2)), delimiter=",")
    code, out, _ = run(["clustersep", tmp_path / "a.csv", tmp_path / "a.csv", "--bandwidth", 0.5])
    assert (code, out) == (0, "1.000000\n")


def test_threads_env(monkeypatch):
    monkeypatch.setenv("COINDEX_THREADS", "3")
    assert cli.threads() == 3
    monkeypatch.setenv("COINDEX_THREADS", "x")
    with pytest.raises(cli.UsageError):
        cli.threads()


class TestFormats:
    def test_collection_roundtrip(self, tmp_path):
        for kind, value in [("set", frozenset("abc")), ("multiset", {"a": 3.0}), ("weighted", {"b": 0.5})]:
            write_collection(tmp_path / "c.json", kind, value)
            assert read_collection(tmp_path / "c.json") == (kind, value)

    def test_function_roundtrip(self, tmp_path):
        f = discretize(np.sin, -1.0, 3.0, 257)
        write_function(tmp_path / "f.csv", f)
        g = read_function(tmp_path / "f.csv")
        np.testing.assert_array_equal(g.samples, f.samples)
        assert g.dx == pytest.approx(f.dx, rel=1e-12)

    def test_nonuniform_rejected(self, tmp_path):
        (tmp_path / "f.csv").write_text("x,value\n0,1\n1,1\n2.5,1\n")
        with pytest.raises(DataError, match="uniformly"):
            read_function(tmp_path / "f.csv")

    def test_non_numeric_line(self, tmp_path):
        (tmp_path / "f.csv").write_text("x,value\n0,1\n1,oops\n")
        with pytest.raises(DataError, match=":3"):
            read_function(tmp_path / "f.csv")

    def test_pgm_roundtrip(self, tmp_path):
        img = synthetic_image(12)
        write_pgm(tmp_path / "a.pgm", img, maxval=65535)
        back = read_pgm(tmp_path / "a.pgm")
        np.testing.assert_allclose(back.samples, img.samples, atol=1 / 65535)

    def test_pgm_comments_and_errors(self, tmp_path):
        (tmp_path / "a.pgm").write_text("P2\n# comment\n2 1\n4\n0 4\n")
        np.testing.assert_array_equal(read_pgm(tmp_path / "a.pgm").samples, [[0.0, 1.0]])
        (tmp_path / "b.pgm").write_text("P5\n2 1\n4\n")
        with pytest.raises(DataError):
            read_pgm(tmp_path / "b.pgm")
        (tmp_path / "c.pgm").write_text("P2\n2 2\n4\n0 4\n")
        with pytest.raises(DataError, match="expected 4 pixels"):
            read_pgm(tmp_path / "c.pgm")
