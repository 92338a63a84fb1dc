import json
from fractions import Fraction

import pytest

from qclassical.cli import run

F = Fraction


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_cqh_json(capsys):
    code, out, _ = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--family", "cqh", "--order", "12",
                          "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "classical"
    assert doc["order_checked"] == 12


def test_classify_remark_exits_zero(capsys):
    code, out, _ = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--family", "remark", "--params", "2,3")
    assert code == 0
    assert "not_classical" in out


def test_pearson_head(capsys):
    code, out, _ = invoke(capsys, "pearson", "--sqrt-q", "1/2",
                          "--head", "0,0,3/16,15/64")
    assert code == 0
    assert "a: 3/4" in out
    assert "psi: x" in out


def test_generate(capsys):
    code, out, _ = invoke(capsys, "generate", "--sqrt-q", "1/2",
                          "--head", "0,0,3/16,15/64", "--order", "3",
                          "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["C"] == ["3/16", "15/64", "63/256"]


def test_necessary(capsys):
    code, out, _ = invoke(capsys, "necessary", "--sqrt-q", "1/2",
                          "--family", "cqh", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 1
    assert doc["basis"] == [["0", "1"]]


def test_dq_sq(capsys):
    code, out, _ = invoke(capsys, "dq", "--sqrt-q", "1/2", "--poly", "x^2")
    assert code == 0
    assert out.strip() == "5/2*x"
    code, out, _ = invoke(capsys, "sq", "--sqrt-q", "1/2", "--poly", "x^3",
                          "--format", "json")
    assert json.loads(out)["coeffs"] == ["0", "-135/64", "0", "65/16"]


def test_expression_source(capsys):
    code, out, _ = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--B-expr", "0", "--C-expr", "(1-q^n)/4",
                          "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "classical"


def test_table_source_round_trip(capsys, tmp_path):
    # a generated family dumped to a table re-classifies identically
    code, out, _ = invoke(capsys, "generate", "--sqrt-q", "1/2",
                          "--head", "0,0,3/16,15/64", "--order", "12",
                          "--format", "json")
    doc = json.loads(out)
    table = {"q_sqrt": "1/2", "B": doc["B"], "C": doc["C"]}
    path = tmp_path / "table.json"
    path.write_text(json.dumps(table))
    code, out, _ = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--table", str(path), "--format", "json")
    assert code == 0
    verdict = json.loads(out)
    assert verdict["status"] == "classical"
    assert verdict["pearson"]["a"] == "3/4"


def test_text_and_json_agree(capsys):
    _, text_out, _ = invoke(capsys, "pearson", "--sqrt-q", "1/2",
                            "--head", "1/7,0,3/16,15/64")
    _, json_out, _ = invoke(capsys, "pearson", "--sqrt-q", "1/2",
                            "--head", "1/7,0,3/16,15/64", "--format", "json")
    doc = json.loads(json_out)
    assert f"a: {doc['a']}" in text_out
    assert f"b: {doc['b']}" in text_out


def test_float_backend(capsys):
    code, out, _ = invoke(capsys, "classify", "--q", "0.25",
                          "--family", "remark", "--params", "2,3",
                          "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "not_classical"


def test_usage_errors(capsys):
    code, _, err = invoke(capsys, "classify", "--family", "cqh")
    assert code == 2  # missing lattice base
    code, _, err = invoke(capsys, "classify", "--sqrt-q", "1/2")
    assert code == 2  # no source
    code, _, err = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--family", "cqh", "--B-expr", "0", "--C-expr", "1")
    assert code == 2  # two sources
    code, _, err = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--family", "remark", "--params", "0,3")
    assert code == 2  # invalid family parameter
    code, _, err = invoke(capsys, "pearson", "--sqrt-q", "1/2",
                          "--head", "0,0")
    assert code == 2


def test_bad_expression_reports_offset(capsys):
    code, _, err = invoke(capsys, "classify", "--sqrt-q", "1/2",
                          "--B-expr", "1+*q", "--C-expr", "1/4")
    assert code == 2
    assert "offset 2" in err
