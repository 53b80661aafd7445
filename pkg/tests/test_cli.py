import io
import json

import pytest

from voltlift.cli import emit_dot, main
from voltlift.surface import ZGraph

EX = """\
group product cyclic 2 cyclic 3
vertices 1
edge e1 0 0 sign=+ voltage=0,1
edge e2 0 0 sign=- voltage=1,0
rotation 0: e1+ e1- e2+ e2-
circle z: e2
"""

THETA = """\
group cyclic 4
vertices 2
edge a 0 1 sign=+ voltage=1
edge b 0 1 sign=+ voltage=0
edge c 0 1 sign=+ voltage=2
rotation 0: a+ b+ c+
rotation 1: c- b- a-
circle z: a b
faces side: 0
"""


@pytest.fixture
def ex_file(tmp_path):
    path = tmp_path / "ex.txt"
    path.write_text(EX)
    return str(path)


@pytest.fixture
def theta_file(tmp_path):
    path = tmp_path / "theta.txt"
    path.write_text(THETA)
    return str(path)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_validate(ex_file):
    code, text = run("validate", ex_file)
    assert code == 0
    assert "status: valid" in text
    code, text = run("validate", ex_file, "--json")
    assert code == 0
    assert json.loads(text)["group_order"] == 6


def test_validate_bad_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("group cyclic 4\n")
    assert run("validate", str(path))[0] == 2
    assert run("validate", str(tmp_path / "missing.txt"))[0] == 1


def test_usage_errors():
    assert run("frobnicate")[0] == 1
    assert run("example", "nope")[0] == 1
    assert run("example", "ex42", "x")[0] == 1


def test_derive_round_trips(ex_file, tmp_path):
    code, text = run("derive", ex_file)
    assert code == 0
    path = tmp_path / "derived.txt"
    path.write_text(text)
    code, summary = run("validate", str(path))
    assert code == 0
    assert "vertices: 6" in summary


def test_analyze(ex_file):
    code, text = run("analyze", ex_file, "--circle", "z", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["derived"]["components"] == 1
    assert data["circle"]["orientation"] == "reversing"
    assert data["circle"]["zregions"] == 2


def test_analyze_face_chain(theta_file):
    code, text = run("analyze", theta_file, "--faces", "side", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["face_chain"]["skeleton_connected"] is True


def test_medial(ex_file):
    code, text = run("medial", ex_file, "--circle", "z")
    assert code == 0
    assert text.startswith("group product cyclic 2 cyclic 3")
    assert "crossing_free_group" in text


def test_zgraph_methods(ex_file):
    for method in ("brute", "coset", "both"):
        code, text = run("zgraph", ex_file, "--circle", "z", "--method", method)
        assert code == 0
        assert "edges: 3" in text
    code, text = run("zgraph", ex_file, "--circle", "z", "--dot")
    assert code == 0
    assert text.count(" -- ") == 3
    assert run("zgraph", ex_file)[0] == 1  # --circle required
    assert run("zgraph", ex_file, "--circle", "q")[0] == 1


def test_zgraph_separating(theta_file):
    code, text = run("zgraph", theta_file, "--circle", "z", "--json")
    assert code == 0
    data = json.loads(text)
    assert len(data["vertices"]) >= 2


def test_verify_single_instance(ex_file):
    code, text = run("verify", ex_file)
    assert code == 0
    assert "result: ok" in text


def test_verify_fuzz():
    code, text = run("verify", "--seed", "1", "--count", "5")
    assert code == 0
    assert "result: ok" in text
    code, text = run("verify", "--seed", "1", "--count", "0", "--json")
    assert code == 0
    assert json.loads(text)["result"] == "ok"


def test_example_command():
    code, text = run("example", "ex44", "2", "2")
    assert code == 0
    assert "# expected" in text
    code, text = run("example", "ex45", "3", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["expected"]["discrepancy_flagged"] is True


def test_emit_dot_stable():
    zg = ZGraph(("a", "b"), ("x", "y", "z"), ((0, 1), (0, 0), (1, 0)))
    dot = emit_dot(zg)
    assert dot == emit_dot(zg)
    assert 'n0 -- n0 [label="y"];' in dot
    assert dot.splitlines()[0] == "graph zgraph {"
