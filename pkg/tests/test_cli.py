import io
import json
import subprocess
import sys

import pytest

from tsskit.cli import run
from tsskit.graph import is_dynamic_monopoly, is_partial_incentive
from tsskit.io import parse_graph, parse_td
from tsskit.decomposition import validate_td

TRIANGLE = "p tss 3 3\ne 1 2\ne 2 3\ne 1 3\n"
PATH = "p tss 3 2\ne 1 2\ne 2 3\n"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_verify_dyn(files):
    code, out, _ = call("verify", "dyn", "--graph", files("t.tss", TRIANGLE), "--set", "1")
    assert code == 0 and "valid: true" in out


def test_verify_failures(files):
    g = files("t.tss", TRIANGLE.replace("e 1 3\n", "e 1 3\nt 1 2\nt 2 2\nt 3 2\n"))
    assert call("verify", "dyn", "--graph", g, "--set", "1")[0] == 1
    assert call("verify", "pi", "--graph", g, "--sigma", "1:2,2:1")[0] == 0
    assert call("verify", "pi", "--graph", g, "--sigma", "1:1")[0] == 1
    code, out, _ = call("verify", "degenerate", "--graph", g, "--set", "1,2", "--kappa-default", "0")
    assert code == 1 and "valid: false" in out


def test_gen_is_byte_stable():
    a = call("gen", "grid", "--rows", "2", "--cols", "2", "--seed", "1")
    b = call("gen", "grid", "--rows", "2", "--cols", "2", "--seed", "1")
    assert a == b and a[0] == 0
    assert parse_graph(a[1]).graph.m == 4


def test_solve_pi_tw(files):
    code, out, _ = call("solve", "pi-tw", "--graph", files("p.tss", PATH))
    assert code == 0
    lines = out.splitlines()
    assert "weight 1" in lines and "verified: true" in lines
    sigma = {int(l.split()[1]): int(l.split()[2]) for l in lines if l.startswith("s ")}
    gf = parse_graph(PATH)
    assert is_partial_incentive(gf.graph, gf.tau, sigma)


def test_solve_pi_tw_with_td(files):
    td = files("p.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n")
    code, out, _ = call("solve", "pi-tw", "--graph", files("p.tss", PATH), "--td", td, "--method", "explicit")
    assert code == 0 and "weight 1" in out and "width 1" in out


def test_json_agrees_with_text(files):
    g = files("t.tss", TRIANGLE + "t 1 2\nt 2 2\nt 3 2\n")
    _, text, _ = call("solve", "pi-tw", "--graph", g)
    _, blob, _ = call("solve", "pi-tw", "--graph", g, "--json")
    obj = json.loads(blob)
    assert f"weight {obj['weight']}" in text
    assert f"states {obj['states']}" in text
    assert obj["verified"] is True
    assert [f"s {v} {x}" for v, x in obj["sigma"]] == [l for l in text.splitlines() if l.startswith("s ")]


def test_solve_interval(files):
    g = files("p.tss", PATH)
    ivs = files("p.iv", "i 1 1 4\ni 2 3 8\ni 3 6 9\n")
    code, out, _ = call("solve", "pi-interval", "--graph", g, "--intervals", ivs, "--t", "1")
    assert code == 0 and "weight 1" in out and "verified: true" in out
    assert call("solve", "pi-interval", "--graph", g)[0] == 2


def test_solve_dyn_exact(files):
    code, out, _ = call("solve", "dyn-exact", "--graph", files("t.tss", TRIANGLE))
    assert code == 0 and "size 1" in out
    d = [int(l.split()[1]) for l in out.splitlines() if l.startswith("d ")]
    gf = parse_graph(TRIANGLE)
    assert is_dynamic_monopoly(gf.graph, gf.tau, d)


def test_state_cap_refuses(files):
    code, out, err = call("solve", "pi-tw", "--graph", files("t.tss", TRIANGLE), "--max-states", "2")
    assert code == 1 and "states" in err and out == ""


@pytest.mark.parametrize("kind,first", [("dyn", "optimum 1"), ("pi", "optimum 1"), ("vc", "optimum 2")])
def test_oracle(files, kind, first):
    code, out, _ = call("oracle", kind, "--graph", files("t.tss", TRIANGLE))
    assert code == 0 and out.splitlines()[0] == first


def test_oracle_alpha_and_limit(files):
    g = files("t.tss", TRIANGLE)
    assert call("oracle", "alpha", "--graph", g, "--kappa-default", "1")[1].startswith("optimum 2")
    assert call("oracle", "alpha", "--graph", g)[0] == 1
    assert call("oracle", "dyn", "--graph", g, "--limit", "2")[0] == 1


def test_approx(files):
    g = files("t.tss", TRIANGLE)
    code, out, _ = call("approx", "dyn-td", "--graph", g)
    assert code == 0 and "verified: true" in out and "width 2" in out
    grid = files("g.tss", call("gen", "grid", "--rows", "3", "--cols", "3")[1])
    code, out, _ = call("approx", "degenerate", "--graph", grid, "--kappa-default", "1",
                        "--epsilon", "0.5", "--outer", "1,2,3,4,6,7,8,9", "--threads", "2")
    assert code == 0 and "verified: true" in out
    assert call("approx", "degenerate", "--graph", grid, "--kappa-default", "1")[0] == 2


def test_hull(files):
    code, out, _ = call("hull", "--graph", files("p.tss", PATH), "--set", "2")
    assert code == 0
    assert out.splitlines() == ["size 3", "complete: true", "a 2 0 0", "a 1 1 1", "a 3 1 1"]


def test_reduce(files, tmp_path):
    g = files("p.tss", PATH)
    code, out, _ = call("reduce", "vc-dyn", "--graph", g)
    assert code == 0 and parse_graph(out).graph.n == 3 + 2 * 3
    td = files("p.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n")
    td_out = str(tmp_path / "out.td")
    code, out, _ = call("reduce", "dyn-pi", "--graph", g, "--td", td, "--td-out", td_out)
    ext = parse_graph(out)
    assert code == 0 and ext.graph.n == 6
    assert validate_td(ext.graph, parse_td(open(td_out).read()))[0]
    assert call("reduce", "dyn-pi", "--graph", g, "--td-out", td_out)[0] == 2


def test_gen_families(tmp_path):
    for fam in ("tree", "random", "interval"):
        code, out, _ = call("gen", fam, "--n", "6", "--seed", "3", "--tau-max", "2")
        assert code == 0 and parse_graph(out).graph.n == 6
    iv = str(tmp_path / "x.iv")
    assert call("gen", "interval", "--n", "5", "--intervals-out", iv)[0] == 0
    assert open(iv).read().startswith("i 1 ")


def test_usage_and_input_errors(files):
    assert call("bogus")[0] == 2
    assert call("hull", "--graph", files("p.tss", PATH), "--nope")[0] == 2
    code, _, err = call("hull", "--graph", files("bad.tss", "p tss 2 1\ne 1 5\n"))
    assert code == 1 and "line 2" in err
    assert call("hull", "--graph", "/nonexistent/file")[0] == 1
    assert call("hull", "--graph", files("p.tss", PATH), "--set", "9")[0] == 1


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "tsskit", "verify", "dyn", "--graph",
                           files("t.tss", TRIANGLE), "--set", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and "valid: true" in proc.stdout
