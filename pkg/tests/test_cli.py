import io

import pytest

from winv import cli
from winv.store import MemoStore


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,value,key", [
    (["--space", "p2", "--real", "tau2", "-d", "5", "-l", "3"], "1872", "P2|tau2|d=5|l=3"),
    (["--space", "p3", "--real", "tau3", "-d", "1", "-m", "3"], "-1", "P3|tau3|d=1|m=3"),
    (["--space", "p1p1", "--real", "twisted", "-d", "1", "-l", "2"], "0", "P1xP1|tau11tw|d=1|l=2"),
    (["--space", "p2", "-d", "8"], "13525751027392", "P2||d=8|"),
    (["--space", "p1p1", "--real", "product", "-d", "3,2", "-l", "1"], "32", "P1xP1|tau11|2,3|l=1"),
    (["--space", "blowup", "--real", "real", "-d", "7", "-b", "2", "-l", "8"], "-4096", "BL(0,1)|real|7;;2|l=8"),
    (["--space", "blowup", "-d", "4", "-a", "2"], "96", "BL(1)||4;2|"),
    (["--space", "p3", "-d", "2", "-m", "2,2,2,2,2,2,2,2"], "92", "P3||d=2|m=2,2,2,2,2,2,2,2"),
    (["--space", "p1cubed", "--real", "phi3", "-d", "1,1,1"], "-1", "P1^3|phi3|1,1,1|m="),
    (["--space", "p1cubed", "--real", "twisted", "-d", "1,1"], "1", "P1^3|phi3tw|1,1|m="),
    (["--space", "p1cubed", "--real", "twisted", "-d", "2,2", "-m", "11", "-l", "1"], "-2",
     "P1^3|phi3tw|2,2|m=21,11"),
])
def test_compute(argv, value, key):
    code, text = run("compute", *argv)
    assert code == 0
    assert text.strip().split("\t") == [value, key]


@pytest.mark.parametrize("argv", [
    ["--space", "p2", "-d", "x"],
    ["--space", "p2", "-d", "0"],
    ["--space", "p2", "--real", "tau3", "-d", "2"],
    ["--space", "p1cubed", "-d", "1,1,1", "-m", "1x1"],
    ["--space", "p1p1", "-d", "1"],
])
def test_compute_usage_errors(argv):
    assert run("compute", *argv)[0] == cli.EXIT_USAGE


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        run("compute", "--space", "p9", "-d", "1")
    assert exc.value.code == 2


def test_scheduling_error_exits_3(monkeypatch, capsys):
    from winv import real4
    from winv.exact import SchedulingError

    def boom(*a, **k):
        raise SchedulingError("no applicable relation for P2|tau2|d=5|l=3")

    monkeypatch.setattr(real4, "wel_p2", boom)
    assert run("compute", "--space", "p2", "--real", "tau2", "-d", "5", "-l", "3")[0] == cli.EXIT_SCHEDULING
    assert "P2|tau2|d=5|l=3" in capsys.readouterr().err


def test_table_diff_and_list():
    code, text = run("table", "T1", "--diff")
    assert code == 0 and "T1: ok" in text
    code, text = run("table", "--list")
    assert code == 0 and "p1cubed-twisted" in text


def test_table_diff_detects_mismatch(tmp_path):
    from winv.tables import GOLDEN_DIR

    src = open("%s/T01.csv" % GOLDEN_DIR).read()
    (tmp_path / "T01.csv").write_text(src.replace("-280576", "-280577"))
    code, text = run("table", "T1", "--diff", str(tmp_path))
    assert code == 1 and "-280577" in text


def test_table_output_formats(tmp_path):
    assert run("table", "T2", "-o", str(tmp_path / "t2.csv"))[0] == 0
    assert (tmp_path / "t2.csv").read_text().startswith("row,d=1")
    code, text = run("table", "T2", "--format", "json")
    assert code == 0 and '"alias": "p1p1-twisted"' in text


def test_cache_file_and_env(tmp_path, monkeypatch):
    path = tmp_path / "cache.txt"
    assert run("compute", "--cache", str(path), "--space", "p2", "-d", "5")[0] == 0
    store = MemoStore()
    assert store.load(path) >= 1 and store.get("P2||d=5|") == 87304
    monkeypatch.setenv("WINV_CACHE", str(path))
    code, text = run("cache", "inspect")
    assert code == 0 and "records" in text
    assert run("cache", "clear")[0] == 0
    assert MemoStore().load(path) == 0


def test_cache_needs_a_path(monkeypatch):
    monkeypatch.delenv("WINV_CACHE", raising=False)
    assert run("cache", "inspect")[0] == cli.EXIT_USAGE


def test_corrupt_cache(tmp_path):
    path = tmp_path / "cache.txt"
    path.write_text("#winv-cache v1 1\nbroken\n")
    assert run("compute", "--cache", str(path), "--space", "p2", "-d", "3")[0] == 1


def test_verify_fiber():
    code, text = run("verify", "--suite", "fiber")
    assert code == 0
    assert "fiber: 6 passed, 0 failed" in text
