import io
import json
import subprocess
import sys

import pytest

from semicoh import cli, coxcech
from semicoh.acceptance import ACCEPTANCE_COMMANDS
from semicoh.coxcech import IrrelevantCheck


def call(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), buf)
    return code, json.loads(buf.getvalue())


def test_facets_example():
    code, env = call("facets", "examples/two-zero-one-one.json")
    assert code == 0 and env["exit_code"] == 0
    assert env["result"]["functionals"] == [[1, 0], [0, 1]]
    assert env["tool"] == "semicoh" and len(env["input_sha256"]) == 64
    assert env["timing"] is None


def test_simplicial_and_hilbert():
    assert call("is-simplicial", "square-cone")[1]["result"]["simplicial"] is False
    res = call("hilbert", "numerical-2-3")[1]["result"]
    assert res["tau_basis"] == [[2], [3]] and res["saturation_basis"] == [[1]]


def test_essential_commands(tmp_path):
    code, env = call("essential", "two-zero-one-one", "--test", "(-1,3)")
    assert code == 0 and env["result"]["status"] == "essential"
    code, env = call("essential", "two-zero-one-one", "--member", "(5,1)")
    assert env["result"]["status"] == "in"
    svg, txt = tmp_path / "g.svg", tmp_path / "g.txt"
    code, env = call("essential", "two-zero-one-one", "--grid", "[-5,7]x[-5,7]",
                     "--svg", str(svg), "--ascii", str(txt))
    assert code == 0 and svg.read_text().startswith("<svg") and "#" in txt.read_text()
    assert call("essential", "numerical-2-3", "--shift")[1]["result"]["shift"] == [4]


def test_localcoh_commands():
    code, env = call("localcoh", "square-cone", "--prime", "edge:x,y", "--cohdeg", "2",
                     "--degree", "x-v")
    assert code == 0 and env["result"]["dim"] == 1
    code, env = call("localcoh", "square-cone", "--prime", "edge:x,y", "--socle", "--box", "4")
    assert env["result"]["certificates"] == [[0, -n, 0] for n in range(1, 5)]
    code, env = call("localcoh", "square-cone", "--converse")
    assert code == 0


def test_cox_command():
    code, env = call("cox", "square-cone", "--irrelevant", "--check-box", "2")
    assert code == 0 and len(env["result"]["generators"]) == 4
    assert env["result"]["agree"] == env["result"]["total"] == 625


def test_exit_codes(monkeypatch, tmp_path):
    assert call("essential", "four-zero-three-one", "--test", "(-5,1)", "--box", "0")[0] == 2
    assert call("essential", "four-zero-three-one", "--shift", "--budget", "3")[0] == 4
    assert call("essential", "square-cone", "--shift")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"generators": [[1,0],\n')
    code, env = call("facets", str(bad))
    assert code == 1 and "line 2 column 1" in env["error"]["message"]
    assert call("facets", str(tmp_path / "missing.json"))[0] == 1
    monkeypatch.setattr(coxcech, "prop_irrelevant_check",
                        lambda Q, box: IrrelevantCheck(1, 0, [(0, 0, 0, 0)], []))
    assert call("cox", "square-cone", "--check-box", "1")[0] == 3


def test_bad_degree_and_usage():
    assert call("essential", "square-cone", "--test", "(1,2)")[0] == 1
    assert call("essential", "square-cone", "--test", "q+x")[0] == 1
    with pytest.raises(SystemExit) as e:
        cli.run(["facets", "square-cone", "--field", "4"], io.StringIO())
    assert e.value.code == 1


def test_timing_flag():
    assert call("facets", "square-cone", "--timing")[1]["timing"]["seconds"] >= 0


def test_parsers():
    spec = cli.load_spec("square-cone")
    assert cli.parse_degree("3x-3v", spec) == (0, -3, 0)
    assert cli.parse_degree("(0,-1,0)", spec) == (0, -1, 0)
    assert cli.parse_box("[-5,7]x[-5,7]") == (-5, 7)
    assert cli.parse_box("4") == (-4, 4)
    assert cli.parse_field("rational") == "rational" and cli.parse_field("5") == 5


def test_deterministic_output():
    for argv in ACCEPTANCE_COMMANDS[:4]:
        a, b = io.StringIO(), io.StringIO()
        cli.run(list(argv), a)
        cli.run(list(argv), b)
        assert a.getvalue() == b.getvalue()


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "semicoh", "corpus"], capture_output=True, text=True)
    assert out.returncode == 0
    names = [e["name"] for e in json.loads(out.stdout)["result"]]
    assert {"two-zero-one-one", "square-cone", "numerical-2-3", "n3"} <= set(names)
