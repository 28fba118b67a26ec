import io
import json
import subprocess
import sys

import pytest

from helpers import S2, chain, cls
from torslice.cli import run
from torslice.io import chain_to_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def chain_files(tmp_path, c_s2):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(chain_to_json(c_s2)))
    b.write_text(json.dumps(chain_to_json(chain(2, [7, cls(2, S2), 0], ["1/2", "3/4"]))))
    return str(a), str(b)


def test_tors_formats():
    code, out, _ = call("tors", "--n", "2")
    assert code == 0 and out.strip().endswith("count 5")
    code, out, _ = call("tors", "--n", "2", "--json")
    assert json.loads(out)["n"] == 2
    code, out, _ = call("tors", "--n", "2", "--dot")
    assert out.startswith("digraph")


def test_hasse_and_mgs():
    code, out, _ = call("hasse", "--n", "2", "--dot")
    assert code == 0 and out.count("->") == 5
    code, out, _ = call("mgs", "--n", "2")
    assert code == 0 and out.splitlines() == ["4 > 3 > 1 > 0", "4 > 2 > 0", "count 2"]


def test_hn_table(chain_files):
    code, out, _ = call("hn", "--n", "2", "--chain", chain_files[0], "--module", "[1,2]")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["layer\tphase\tfactor", "[2,2]\t2/3\t[2,2]", "[1,2]\t1/3\t[1,1]"]


def test_dist(chain_files):
    code, out, _ = call("dist", "--chain1", chain_files[0], "--chain2", chain_files[1])
    assert code == 0 and out == "1/6\n"
    code, out, _ = call("dist", "--chain1", chain_files[0], "--chain2", chain_files[1], "--filt-check")
    assert code == 0 and out == "1/6\nfilt 1/6\n"


def test_nerve_report():
    code, out, _ = call("nerve", "--n", "2")
    assert code == 0 and "f_vector 1 3 1" in out and "compact: finite CW complex" in out
    code, out, _ = call("nerve", "--n", "2", "--json")
    assert json.loads(out)["f_vector"] == [1, 3, 1]


def test_wsc_queries(tmp_path):
    cond = tmp_path / "cc.json"
    cond.write_text(json.dumps({"kind": "central_charge", "theta": [1, -1], "delta": [1, 1]}))
    code, out, _ = call("wsc", "--spec", str(cond), "--etapm")
    assert code == 0 and "1/2\t{[1,1],[1,2]}\t{[1,1]}" in out
    code, out, _ = call("wsc", "--spec", str(cond), "--seesaw")
    assert code == 0 and "weak pass" in out and "strict pass" in out
    code, out, _ = call("wsc", "--spec", str(cond), "--semistable", "[1,2]")
    assert code == 0 and out == "phase 1/2\nsemistable yes\n"


def test_check_suite_small():
    code, out, _ = call("check", "--suite", "core", "--n", "1")
    assert code == 0 and out.strip().endswith("OK: 0 failing check(s)")


def test_exit_codes(tmp_path, chain_files):
    assert call("bogus")[0] == 2
    assert call("tors")[0] == 2
    assert call("tors", "--n", "zero")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "classes": [["[1,1]", "[1,2]", "[2,2]"], ["[9,9]"], []], "breakpoints": ["1/2"]}))
    code, _, err = call("dist", "--chain1", str(bad), "--chain2", chain_files[1])
    assert code == 2 and "classes[1][0]" in err
    code, _, err = call("hn", "--n", "2", "--chain", chain_files[0], "--module", "[1,")
    assert code == 2
    code, _, err = call("dist", "--chain1", str(tmp_path / "missing.json"), "--chain2", chain_files[1])
    assert code == 2 and "cannot read" in err


def test_output_is_deterministic():
    assert call("nerve", "--n", "3") == call("nerve", "--n", "3")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torslice.cli", "mgs", "--n", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("count 1\n")
