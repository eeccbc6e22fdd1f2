"""Command-line interface: output shapes, determinism, exit codes."""

import json

import pytest

from relsym.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_groups(capsys):
    code, out, _ = _run(capsys, "list-groups")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.startswith("group:O ") and "E7^(1)" in line for line in lines)
    assert any(line.startswith("group:S3_111 ") for line in lines)


def test_list_pairs(capsys):
    code, out, _ = _run(capsys, "list-pairs")
    assert code == 0
    assert "pair:T<O" in out and "E6^(2)" in out and "F4^(1)" in out


def test_series_all_methods_agree(capsys):
    code, out, _ = _run(capsys, "series", "pair:T<O", "--order", "19",
                        "--method", "all")
    assert code == 0
    lines = out.strip().splitlines()
    coeff_lines = [l.split(": ", 1)[1] for l in lines if ": " in l
                   and l.split(": ")[0] in ("det", "molien", "closed")]
    assert len(coeff_lines) == 3 and len(set(coeff_lines)) == 1
    assert coeff_lines[0].endswith("2 0 1 0 1 0 2")
    assert "factored: (1+t^12)/((1-t^6)(1-t^8))" in lines


def test_series_default_order(capsys):
    code, out, _ = _run(capsys, "series", "group:C2")
    assert code == 0
    det_line = next(l for l in out.splitlines() if l.startswith("det: "))
    assert len(det_line.split()) == 65  # "det:" plus 64 coefficients


def test_series_nontrivial_label(capsys):
    code, out, _ = _run(capsys, "series", "group:D2", "--label", "4",
                        "--order", "8")
    assert code == 0
    assert out.startswith("det: 0 1 0 ")


def test_char_table(capsys):
    code, out, _ = _run(capsys, "char-table", "group:D2")
    assert code == 0
    assert "chi_4 (deg 2): 2 -2 0 0 0" in out


def test_quiver_dot_and_json(capsys):
    code, dot, _ = _run(capsys, "quiver", "pair:D2<T", "--side", "ind")
    assert code == 0
    assert dot.startswith("digraph quiver {")
    assert dot.count("v1 -> v2;") == 3  # the triple arrow of G2^(1)
    code, js, _ = _run(capsys, "quiver", "pair:D2<T", "--side", "ind",
                       "--format", "json")
    assert code == 0
    data = json.loads(js)
    assert data["entries"] == [[0, 0, 1], [0, 0, 1], [1, 3, 0]]


def test_dump_round_trip_deterministic(capsys):
    code, a, _ = _run(capsys, "dump", "group:T")
    assert code == 0
    code, b, _ = _run(capsys, "dump", "group:T")
    assert a == b
    data = json.loads(a)
    assert data["order"] == 24 and data["degrees"] == [1, 1, 1, 2, 2, 2, 3]
    code, p, _ = _run(capsys, "dump", "pair:C4<D2")
    assert code == 0
    pd = json.loads(p)
    assert pd["restriction"]["type"] == "D3^(2)"
    assert pd["induction"]["type"] == "C2^(1)"


def test_verify_suite_exit_codes(capsys):
    code, out, _ = _run(capsys, "verify", "tables")
    assert code == 0 and out.strip().endswith("PASS (0 failures)")


@pytest.mark.parametrize("argv", [
    ("series", "group:NOPE"),
    ("series", "pair:X<Y"),
    ("char-table", "pair:T<O"),
    ("series", "pair:T<O", "--label", "99"),
    ("series", "pair:T<O", "--label", "1", "--method", "closed"),
    ("series", "nonsense"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2


def test_unknown_command_exit_2(capsys):
    assert run(["frobnicate"]) == 2
