import json
from fractions import Fraction as F

import pytest

from ternary_leibniz import catalog
from ternary_leibniz.cli import FAILURE, INPUT_ERROR, OK, main
from ternary_leibniz.core import BracketTable, TernaryAlgebra, abelian

from oracles import brute_force_defects


def write(tmp_path, name, A):
    path = tmp_path / f"{name}.txt"
    path.write_text(catalog.serialize(A), encoding="utf-8")
    return str(path)


def broken_L2():
    A = catalog.builtin("L2")
    coeffs = dict(A.table.items())
    coeffs[(1, 1, 1, 1)] = F(1)
    B = TernaryAlgebra("L2-broken", BracketTable(4, coeffs))
    assert brute_force_defects(B)
    return B


def test_check_exit_codes(tmp_path, capsys):
    assert main(["check", write(tmp_path, "L2", catalog.builtin("L2"))]) == OK
    assert main(["check", write(tmp_path, "bad", broken_L2())]) == FAILURE
    out = capsys.readouterr().out
    assert "defect" in out and "residual" in out


def test_check_malformed(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("dim x\n")
    assert main(["check", str(path)]) == INPUT_ERROR
    assert "line 1" in capsys.readouterr().err
    path.write_text("dim 2\n1 1 1 1 1\n1 1 1 9 1\n")
    assert main(["check", str(path)]) == INPUT_ERROR
    assert "line 3" in capsys.readouterr().err


def test_missing_file_and_bad_usage(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.txt")]) == INPUT_ERROR
    assert main([]) == INPUT_ERROR
    assert main(["frobnicate"]) == INPUT_ERROR


@pytest.mark.parametrize("command", ["centroid", "qcentroid", "der"])
def test_abelian_spaces_are_full(tmp_path, capsys, command):
    assert main([command, write(tmp_path, "ab", abelian(4))]) == OK
    assert "dim = 16" in capsys.readouterr().out


def test_cder_abelian(tmp_path, capsys):
    assert main(["cder", write(tmp_path, "ab", abelian(4))]) == OK
    assert "dim = 16" in capsys.readouterr().out


def test_space_dims_for_catalog_files(tmp_path, capsys):
    # the table lists 3 and 2 here; the solver values are authoritative
    assert main(["centroid", write(tmp_path, "L2", catalog.builtin("L2"))]) == OK
    assert capsys.readouterr().out.rstrip().endswith("dim = 5")
    assert main(["qcentroid", write(tmp_path, "L12", catalog.builtin("L12"))]) == OK
    assert capsys.readouterr().out.rstrip().endswith("dim = 5")


def test_space_json(tmp_path, capsys):
    path = write(tmp_path, "L1", catalog.builtin("L1"))
    assert main(["qcentroid", "--json", path]) == OK
    first = capsys.readouterr().out
    payload = json.loads(first)
    assert payload["dim"] == 9 and payload["space"] == "qcentroid"
    assert len(payload["basis"]) == 9
    assert all(isinstance(x, str) for m in payload["basis"] for row in m for x in row)
    assert payload["pattern"][2] == ["0", "0", "a11", "0"]
    assert main(["qcentroid", "--json", path]) == OK
    assert capsys.readouterr().out == first


def test_space_on_non_leibniz_warns(tmp_path, capsys):
    assert main(["centroid", write(tmp_path, "bad", broken_L2())]) == OK
    assert "warning" in capsys.readouterr().err


def test_props(tmp_path, capsys):
    assert main(["props", write(tmp_path, "L5", catalog.builtin("L5"))]) == OK
    out = capsys.readouterr().out
    assert "FAIL" not in out and "central_derivations_equal_cent_cap_der" in out
    assert main(["props", write(tmp_path, "ab", abelian(4))]) == OK
    capsys.readouterr()
    assert main(["props", write(tmp_path, "bad", broken_L2())]) == INPUT_ERROR
    assert "NotLeibniz" in capsys.readouterr().err


def test_catalog_list_and_dump(capsys):
    assert main(["catalog", "list"]) == OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 18 and lines[6].startswith("L7")
    assert main(["catalog", "dump", "L15"]) == OK
    assert catalog.parse(capsys.readouterr().out).table == catalog.builtin("L15").table
    assert main(["catalog", "dump", "L18", "--alpha", "1/2"]) == OK
    text = capsys.readouterr().out
    assert catalog.parse(text).table == catalog.builtin("L18", {"alpha": F(1, 2)}).table


@pytest.mark.parametrize("argv", [
    ["catalog", "dump"],
    ["catalog", "dump", "L7"],
    ["catalog", "dump", "L1", "--alpha", "1"],
    ["catalog", "dump", "L99"],
    ["catalog", "dump", "L7", "--alpha", "0.5"],
    ["verify-catalog", "--alpha", "x"],
])
def test_catalog_input_errors(argv, capsys):
    assert main(argv) == INPUT_ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_verify_catalog_reports_mismatches(capsys):
    assert main(["verify-catalog", "--alpha", "0,1", "--no-patterns"]) == FAILURE
    out = capsys.readouterr().out
    assert "RESULT: mismatches present" in out
    assert "L10" in out and "NO" in out


def test_verify_catalog_json(capsys):
    assert main(["verify-catalog", "--alpha", "1", "--json"]) == FAILURE
    data = json.loads(capsys.readouterr().out)
    assert data["alpha_samples"] == ["1"]
    assert [r["key"] for r in data["records"]] == [f"L{i}" for i in range(1, 19)]
