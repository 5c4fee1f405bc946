import io
import json

import pytest

from sl2auto.cli import main
from sl2auto.g3 import G3Element
from sl2auto.inner import AutMatrix, exp_ad
from sl2auto.algebra import VarSpec
from sl2auto.parser import parse_poly, parse_w
from sl2auto.walgebra import WElement


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compose_text(capsys):
    code, out, _ = run(capsys, "compose", "x", "y", "--order", "4")
    assert code == 0
    assert out.splitlines()[0].startswith("x + y + 1/2·[x,y] - 1/6·")
    assert "W-element: " in out and "commutators: " in out


def test_compose_matches_bch_projection(capsys):
    _, out, _ = run(capsys, "compose", "x", "y", "--order", "6", "--format", "json")
    _, out2, _ = run(capsys, "bch", "6", "--format", "json")
    assert json.loads(out)["element"] == json.loads(out2)["w"]


def test_lie_check_reports_notlie(capsys):
    code, out, _ = run(capsys, "lie-check", "t*x")
    assert code == 2 and "NotLie" in out


def test_lie_check_member(capsys):
    code, out, _ = run(capsys, "lie-check", "[x,y,x] + y")
    assert code == 0 and "beta = 1" in out


def test_lie_form(capsys):
    code, out, _ = run(capsys, "lie-form", "2*(v*x - t*y)")
    assert code == 0 and out.strip() == "[x,y,x]"


def test_exp_zero_is_identity(capsys):
    code, out, _ = run(capsys, "exp", "0", "--order", "6", "--format", "json")
    assert code == 0
    assert AutMatrix.from_json(json.loads(out)) == AutMatrix.identity(6)


def test_exp_log_round_trip(capsys, monkeypatch, tmp_path):
    _, out, _ = run(capsys, "exp", "x + t*y + [x,y]", "--order", "7", "--format", "json")
    path = tmp_path / "q.json"
    path.write_text(out)
    code, text, _ = run(capsys, "log", str(path), "--format", "json")
    assert code == 0
    X = parse_w("x + t*y + [x,y]", 6)
    assert WElement.from_json(json.loads(text)["element"]) == X
    code, text2, _ = run(capsys, "log", "-", "--format", "json", stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and text2 == text


def test_log_of_tampered_matrix(capsys, tmp_path):
    data = exp_ad(parse_w("x + y", 6)).to_json()
    data["entries"][0][2]["terms"].append({"exp": [1, 0, 0], "num": "1", "den": "1"})
    data.pop("g", None)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "log", str(path))
    assert code == 3 and "ConsistencyError" in err


def test_stdin_expression(capsys, monkeypatch):
    code, out, _ = run(capsys, "normalize", "-", stdin="x*y - y*x", monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "[x,y]"


def test_class_flag(capsys):
    code, out, _ = run(capsys, "exp", "x", "--class", "3", "--format", "json")
    assert code == 0
    entries = json.loads(out)["entries"]
    assert all(sum(term["exp"]) * 2 <= 2 for row in entries for p in row for term in p["terms"])


def test_ad(capsys):
    code, out, _ = run(capsys, "ad", "x")
    assert code == 0 and "2*v" in out.replace("·", "*")


@pytest.mark.parametrize("argv", [["normalize", "[x]"], ["frobnicate"], ["exp", "x", "--order", "0"],
                                  ["normalize", "x +"]])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_bch_negative_argument(capsys):
    code, out, _ = run(capsys, "bch", "-3")
    assert code == 0 and out.startswith("free: ")


def test_g3_commands(capsys, monkeypatch):
    code, out, _ = run(capsys, "g3", "g", "a, b, c")
    assert code == 0 and out.strip() == "-4*a*c + b^2"
    code, out, _ = run(capsys, "g3", "compose", "a, 0, 0", "0, 0, b", "--order", "3")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "g3", "exp", "a, b, c", "--order", "4", "--format", "json")
    assert code == 0
    code, back, _ = run(capsys, "g3", "recover", "-", "--format", "json", stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    vs = VarSpec.uniform(("a", "b", "c"))
    expected = G3Element(*(parse_poly(n, vs) for n in "abc"), order=4)
    assert json.loads(back) == expected.to_json()


def test_nilpotent(capsys):
    code, out, _ = run(capsys, "nilpotent", "--order", "9")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 9


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--order", "5", "--seed", "3")
    assert code == 0 and "FAIL" not in out
