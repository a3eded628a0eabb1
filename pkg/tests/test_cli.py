import io
import subprocess
import sys

import pytest

from dommedian.cli import main
from dommedian.graph import cycle_graph, path_graph
from dommedian.graph_io import parse_graph6, write_edgelist


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out=out, err=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_classify_c4():
    code, out, _ = run(["classify"], "Cr\n")
    assert code == 0
    assert out == "dm=false mdscomds=true leaf_condition=false\n"


def test_classify_witness():
    _, out, _ = run(["classify", "--witness"], "Cl\n")
    assert "dm_witness={0,1};{0,2};{0,3}" in out


def test_domgraph_stats():
    code, out, _ = run(["domgraph", "--k", "full", "--stats"], "A_\n")
    assert code == 0 and out == "order=3 size=2 connected=true isometric=true\n"


def test_domgraph_dot(tmp_path):
    path = tmp_path / "d.dot"
    code, _, _ = run(["domgraph", "--dot", str(path)], "A_\n")
    assert code == 0 and '"{0,1}"' in path.read_text()


def test_domgraph_bad_k():
    code, _, err = run(["domgraph", "--k", "two"], "A_\n")
    assert code == 2 and "error" in err


def test_median_and_partial_cube():
    assert run(["median"], "EhEG\n")[:2] == (1, "median=false witness=0,2,4\n")
    assert run(["median"], "Cs\n")[:2] == (0, "median=true\n")
    code, out, _ = run(["partial-cube", "--labels"], "Bg\n")
    assert code == 0 and out == "partial_cube=true labels={} {0} {0,1}\n"
    assert run(["partial-cube"], "Bw\n")[0] == 1


def test_gamma_and_inverse():
    g6 = "F{`A?\n"
    assert run(["gamma"], g6)[1] == "gamma=2\n"
    assert run(["inv-gamma"], g6)[1] == "inv_gamma=5\n"


def test_inverse_isolated_is_usage_error():
    code, _, err = run(["inv-gamma"], "B?\n")
    assert code == 2 and "isolated" in err


def test_extend_modes():
    _, out, _ = run(["extend", "--mode", "corona"], "Bw\n")
    assert parse_graph6(out.strip()).n == 6
    _, out, _ = run(["extend"], "Bw\n")
    assert parse_graph6(out.strip()).n == 6
    assert run(["extend"], "Bg\n")[1] == "Bg\n"


def test_edgelist_format():
    text = write_edgelist(path_graph(3)) + write_edgelist(cycle_graph(4))
    code, out, _ = run(["gamma", "--format", "edgelist"], text)
    assert code == 0 and out == "gamma=1\ngamma=2\n"
    _, out, _ = run(["extend", "--mode", "corona", "--format", "edgelist"], "n 2\n0 1\n")
    assert out == "n 4\n0 1\n0 2\n1 3\n"


def test_parse_error_exit_code():
    assert run(["gamma"], "C\n")[0] == 2
    code, _, err = run(["gamma", "--format", "edgelist"], "n 3\n0 3\n")
    assert code == 2 and "line 2" in err


def test_budget_exit_code():
    assert run(["gamma", "--budget", "4"], "Cl\n")[0] == 3


def test_geodesic():
    code, out, _ = run(["geodesic", "--from", "{0,1}", "--to", "{2,3}"], "Cl\n")
    assert code == 0
    assert out == "length=4 path={0,1}->{0,1,2}->{0,1,2,3}->{1,2,3}->{2,3}\n"
    assert run(["geodesic", "--from", "{0}", "--to", "{2,3}"], "Cl\n")[0] == 2


def test_verify_small():
    code, out, err = run(["verify", "thm3.1", "--max-n", "5"])
    assert code == 0
    assert out == "check=thm3.1 max_n=5 checked=814 failures=0\n"
    assert "ok" in err


def test_verify_reports_counterexample():
    code, out, _ = run(["verify", "thm3.1", "--max-n", "6"])
    assert code == 1 and "failures=45" in out and "counterexample=" in out


def test_preimage(tmp_path):
    target = tmp_path / "t.g6"
    target.write_text("Bg\n")
    code, out, _ = run(["preimage", "--target", str(target)])
    assert (code, out) == (0, "preimage=A_\n")
    target.write_text("Cs\n")  # K_{1,3}
    assert run(["preimage", "--target", str(target)])[:2] == (1, "preimage=none\n")


def test_missing_target_file(tmp_path):
    assert run(["preimage", "--target", str(tmp_path / "nope")])[0] == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["nonsense"], out=io.StringIO(), err=io.StringIO())
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dommedian", "classify"],
        input="Cl\n", capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "dm=false mdscomds=true leaf_condition=false\n"


def test_jobs_flag_streams_in_order():
    text = "A_\nBg\nCl\nB?\n"
    one = run(["gamma", "--jobs", "1"], text)
    two = run(["gamma", "--jobs", "2"], text)
    assert one[1] == two[1] == "gamma=1\ngamma=1\ngamma=2\ngamma=3\n"
