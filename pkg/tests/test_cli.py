import csv
import io
import json
import subprocess
import sys

import pytest

from ceilab.cli import main
from ceilab.generators import build
from ceilab.graphs import format_graph
from ceilab.report import CSV_COLUMNS
from ceilab.suites import Params, SUITE_ORDER, run_suite


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_depth_path5():
    code, text = run("depth", "path5", "--kmax", "4")
    assert code == 0
    rows = [line.split() for line in text.splitlines() if line.strip()[:1].isdigit()]
    assert [int(r[1]) for r in rows] == [3, 2, 1, 1]
    assert "dstab=3" in text


def test_spread_from_file(tmp_path):
    f = tmp_path / "c3.txt"
    f.write_text(format_graph(build("cycle3")))
    out = tmp_path / "s.json"
    code, text = run("spread", str(f), "--json", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1 and rep["command"] == "spread"
    assert rep["spread_complementary"] == rep["spread_edge"] == 3
    assert rep["normal"] is True and rep["limit_depth"] == 0
    assert "normal = true" in text


def test_rees_reports_walk_crosscheck(tmp_path):
    out = tmp_path / "r.csv"
    code, text = run("rees", "cycle4", "--csv", str(out))
    assert code == 0 and "5/5" in text and "quadratic True" in text
    rows = list(csv.reader(out.read_text().splitlines()))
    assert tuple(rows[0]) == CSV_COLUMNS["rees"] and len(rows) == 6


def test_rees_given_labeling():
    code, text = run("rees", "path3", "--labeling", "given")
    assert code == 0 and "x1*y2 - x3*y1" in text


def test_ideal_and_koszul():
    code, text = run("ideal", "path4", "--power", "2", "--betti")
    assert code == 0 and "6 generators" in text and "depth S/I = 1" in text
    code, text = run("koszul", "cycle6")
    assert code == 0 and "(i) violated" in text


def test_depth_csv_columns(tmp_path):
    out = tmp_path / "d.csv"
    assert run("depth", "cycle4", "--csv", str(out), "--crosscheck")[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,depth,method" and len(lines) == 4


def test_usage_errors():
    assert run("depth", "no-such-graph")[0] == 2
    assert run("verify", "--suite", "bogus")[0] == 2
    assert run("verify", "--exhaustive", "--random", "5")[0] == 2
    assert run("ideal", "path3", "--power", "0")[0] == 2
    assert run()[0] == 2


def test_resource_errors():
    assert run("rees", "complete6")[0] == 3
    assert run("verify", "--suite", "degx", "--nmax", "7", "--exhaustive")[0] == 3


def test_time_budget(monkeypatch):
    monkeypatch.setenv("CEILAB_BUDGET_MS", "1")
    assert run("rees", "complete5", "--max-gens", "10", "--walks", "off")[0] == 3


def test_verify_small_suites_pass(tmp_path):
    js, cs = tmp_path / "v.json", tmp_path / "v.csv"
    code, text = run("verify", "--suite", "tree-gb", "--nmax", "5", "--json", str(js), "--csv", str(cs))
    assert code == 0 and "pass" in text
    rep = json.loads(js.read_text())
    (suite,) = rep["suites"]
    assert suite["status"] == "pass" and suite["instances"] == 2 + 6 + 24
    assert suite["theorem"] and suite["expectation"]
    assert "elapsed_ms" not in suite
    assert cs.read_text().splitlines()[0] == ",".join(CSV_COLUMNS["verify"])


def test_verify_is_byte_identical(tmp_path):
    files = []
    for i in range(2):
        f = tmp_path / f"r{i}.json"
        assert run("verify", "--suite", "unicyclic-gb", "--random", "15", "--seed", "4", "--json", str(f))[0] == 0
        files.append(f.read_bytes())
    assert files[0] == files[1]


def test_insufficient_instances_are_not_a_pass():
    code, text = run("verify", "--suite", "rank-lemma", "--random", "20")
    assert code == 1 and "skipped" in text


def test_worker_pool_gives_the_same_verdict():
    p = Params(nmax=4)
    a = run_suite("limit-depth", p)
    b = run_suite("limit-depth", p._replace(jobs=2))
    assert a._replace(elapsed_ms=None) == b._replace(elapsed_ms=None)


def test_suite_order_and_names():
    assert SUITE_ORDER[:3] == ("path", "limit-depth", "degx")
    with pytest.raises(Exception):
        run_suite("nope")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ceilab", "depth", "path4"], capture_output=True, text=True)
    assert res.returncode == 0 and "dstab=2" in res.stdout
