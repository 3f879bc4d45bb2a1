import io
import json
import subprocess
import sys

import pytest

from conftest import FAKE_ADAPTER
from superdescent.cli import run


def call(*argv):
    buf = io.BytesIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_super_json():
    code, out = call("super", "--p", "3", "--f", "[691,0,0,1]", "--g", "[-17,0,1]", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["points"] == [["13", "76"]]
    assert doc["c"] == "472568"


def test_quartic_text():
    code, out = call("quartic", "--variant", "minus", "--g", "[1,5,1]")
    assert code == 0
    text = out.decode()
    assert "(2, 15)" in text and "certified complete" in text


def test_hyper_json_points_sorted():
    code, out = call("hyper", "--f", "x^3+x+1", "--g", "x^4+2x^3-3x^2+4x+4", "--height", "100", "--format", "json")
    assert code == 0
    assert b'"points":[["-2","12"],["-1","2"],["0","2"],["3","62"]]' in out


def test_text_height_label():
    code, out = call("hyper", "--f", "x^3+x+1", "--g", "x^4+2x^3-3x^2+4x+4")
    assert code == 0
    assert b"complete up to height 10000" in out


def test_csv_empty_and_rows():
    code, out = call("quartic", "--variant", "plus", "--g", "x^2+3", "--format", "csv")
    assert code == 0
    assert out == b"x,y,d_source,complete\n"
    code, out = call("quartic", "--variant", "minus", "--g", "[1,5,1]", "--format", "csv")
    lines = out.decode().splitlines()
    assert lines[0] == "x,y,d_source,complete"
    assert "2,15,15,True" in lines
    assert any(ln.startswith("-1,0,") for ln in lines)


def test_json_deterministic():
    argv = ("super", "--p", "3", "--f", "[625,0,0,1]", "--g", "[1,1]", "--format", "json", "--height", "300")
    assert call(*argv) == call(*argv)
    assert call(*argv[:-2], "--workers", "3", "--height", "300") == call(*argv)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["super", "--p", "3", "--f", "[691,0,0,1]"],
        ["super", "--p", "3", "--f", "x^^2", "--g", "[1,1]"],
        ["super", "--p", "3", "--f", "[1,1,0,1]", "--g", "[1,1]"],
        ["hyper", "--f", "[0,0,1,1]", "--g", "[1,1]"],
        ["quartic", "--variant", "minus", "--g", "[-1,1]"],
        ["quartic", "--variant", "minus", "--g", "[1,5,1]", "--height", "0"],
        ["quartic", "--variant", "minus", "--g", "[1,5,1]", "--digit-budget", "3"],
        ["hyper", "--f", "x^3+x+1", "--g", "[1,1]", "--backend", "external", "--adapter", ""],
        ["tables", "--family", "x2kx1", "--kmin", "10", "--kmax", "5"],
        ["pell", "--d", "49"],
    ],
)
def test_usage_and_input_errors_exit_1(argv, monkeypatch):
    monkeypatch.delenv("SUPERDESCENT_ADAPTER", raising=False)
    code, _ = call(*argv)
    assert code == 1


def test_adapter_failure_exit_2():
    adapter = " ".join(FAKE_ADAPTER) + " --mode fail"
    code, out = call("hyper", "--f", "x^3+x+1", "--g", "x^4+2x^3-3x^2+4x+4", "--backend", "external", "--adapter", adapter)
    assert code == 2
    assert b"partial (solver errors)" in out


def test_adapter_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("SUPERDESCENT_ADAPTER", " ".join(FAKE_ADAPTER))
    cache = tmp_path / "cache.json"
    code, out = call(
        "hyper", "--f", "x^3+x+1", "--g", "x^4+2x^3-3x^2+4x+4", "--backend", "external", "--cache", str(cache), "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["complete"] is True
    assert cache.exists()


def test_tables_first_rows():
    code, out = call("tables", "--family", "x2kx1", "--kmax", "200", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    with_points = {r["k"]: r["points"] for r in rows if r["points"]}
    assert with_points == {
        "5": [["2", "15"]],
        "26": [["5", "312"]],
        "65": [["2", "45"], ["5", "468"]],
        "101": [["10", "3333"]],
        "185": [["2", "75"]],
    }


def test_tables_digit_budget_skip(monkeypatch):
    from superdescent import pell

    monkeypatch.setattr(pell, "_maybe_square", lambda r: True)
    code, out = call("tables", "--family", "x2kx1", "--kmin", "60", "--kmax", "70", "--digit-budget", "10")
    assert code == 0
    assert b"skipped (digit budget)" in out


def test_pell_command():
    code, out = call("pell", "--d", "1785", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["pell"] == ["169", "4"]
    assert doc["quartic_minus"] == [["13", "4"], ["239", "1352"]]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "superdescent", "quartic", "--variant", "minus", "--g", "[1,5,1]", "--format", "json"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert ["2", "15"] in json.loads(proc.stdout)["points"]
