import io
import json

import pytest

from fockspace import cli


def run(argv, tmp_path, monkeypatch):
    monkeypatch.setenv("FOCK_CACHE_DIR", str(tmp_path / "cache"))
    out = io.StringIO()
    code = cli.main(argv, out)
    return code, out.getvalue()


def test_dmatrix_csv(tmp_path, monkeypatch):
    code, text = run(["dmatrix", "--n", "2", "--ell", "2", "--format", "csv"], tmp_path, monkeypatch)
    assert code == 0
    assert text.splitlines()[1:] == ["(2),1,0", '"(1,1)",q,1']


def test_dmatrix_cache_is_byte_identical(tmp_path, monkeypatch):
    args = ["dmatrix", "--n", "6", "--ell", "3", "--format", "json"]
    _, cold = run(args, tmp_path, monkeypatch)
    files = list((tmp_path / "cache").iterdir())
    assert len(files) == 1
    _, warm = run(args, tmp_path, monkeypatch)
    assert warm == cold


def test_corrupt_or_stale_cache_is_ignored(tmp_path, monkeypatch):
    args = ["dmatrix", "--n", "3", "--ell", "2", "--format", "latex"]
    _, cold = run(args, tmp_path, monkeypatch)
    (path,) = (tmp_path / "cache").iterdir()
    entry = json.loads(path.read_text())
    entry["payload"]["entries"] = []
    path.write_text(json.dumps(entry))
    assert run(args, tmp_path, monkeypatch)[1] == cold
    entry["key"]["version"] = "0.0.0"
    path.write_text(json.dumps(entry))
    assert run(args, tmp_path, monkeypatch)[1] == cold


def test_dmatrix_trivial_and_latex(tmp_path, monkeypatch):
    code, text = run(["dmatrix", "--n", "0", "--ell", "3", "--format", "json"], tmp_path, monkeypatch)
    assert json.loads(text)["entries"] == [[0, 0, {"0": "1"}]]
    _, tex = run(["dmatrix", "--n", "3", "--ell", "2", "--format", "latex"], tmp_path, monkeypatch)
    assert "$(1,1,1)$ & $q$ & $0$ & $1$" in tex


@pytest.mark.parametrize("n,ell", [(10, 3), (2, 2), (1, 2)])
def test_verify_passes(tmp_path, monkeypatch, n, ell):
    code, text = run(["verify", "--n", str(n), "--ell", str(ell)], tmp_path, monkeypatch)
    report = json.loads(text)
    assert code == 0 and report["passed"]
    names = {c["check"] for c in report["checks"]}
    assert {"main_theorem", "l1", "l2", "l3", "l4", "ll1", "ll2", "ll3", "d_n"} <= names


def test_crystal_outputs(tmp_path, monkeypatch):
    code, dot = run(["crystal", "--ell", "3", "--depth", "4"], tmp_path, monkeypatch)
    assert code == 0 and dot.startswith("digraph")
    _, again = run(["crystal", "--ell", "3", "--depth", "4"], tmp_path, monkeypatch)
    assert again == dot
    _, js = run(["crystal", "--ell", "2", "--depth", "0", "--format", "json"], tmp_path, monkeypatch)
    assert json.loads(js)["nodes"] == [[]]


def test_reduce(tmp_path, monkeypatch):
    code, text = run(["reduce", "--lambda", "(20,8,8,8,8)", "--mu", "(20,14,10,6,2)", "--ell", "3", "--oracle"],
                     tmp_path, monkeypatch)
    report = json.loads(text)
    assert code == 0 and report["conclusion"] == 1
    assert all(c["passed"] for c in report["oracle"])


@pytest.mark.parametrize("argv", [
    ["dmatrix", "--n", "-1", "--ell", "2"],
    ["dmatrix", "--n", "2", "--ell", "1"],
    ["crystal", "--ell", "3"],
    ["verify", "--n", "0", "--ell", "2"],
    ["reduce", "--lambda", "(2,1)", "--mu", "(2)", "--ell", "2"],
    ["reduce", "--lambda", "(1,2)", "--mu", "(3)", "--ell", "2"],
    ["bogus"],
])
def test_usage_errors(tmp_path, monkeypatch, argv):
    assert run(argv, tmp_path, monkeypatch)[0] == 2
