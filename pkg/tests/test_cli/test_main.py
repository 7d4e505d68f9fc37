from __future__ import annotations

import json
from pathlib import Path

import pytest

from ckmarkov.io.matrix_file import format_matrix, parse_matrix, write_matrix
from ckmarkov.main import main
from ckmarkov.surgery.binary import BinaryMatrix
from ckmarkov.surgery.constructions import bar_construction

FULL_2_SHIFT = BinaryMatrix.from_rows([[1, 1], [1, 1]])


def _write(tmp_path: Path, name: str, a: BinaryMatrix) -> str:
    path = tmp_path / name
    write_matrix(a, path)
    return str(path)


# ---------------------------------------------------------------------------
# transform / conjugate
# ---------------------------------------------------------------------------


def test_transform_bar_to_stdout(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    assert main(["transform", "--op", "bar", "--in", path]) == 0
    assert capsys.readouterr().out == format_matrix(bar_construction(FULL_2_SHIFT))


def test_transform_to_file_with_edges(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    out = tmp_path / "splice.txt"
    assert main(["transform", "--op", "splice", "--in", path, "--out", str(out), "--edges"]) == 0
    assert parse_matrix(out.read_text(encoding="utf-8")).size == 4
    assert capsys.readouterr().out.startswith("# 4 vertices, 10 edges\n")


def test_transform_transfer(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "bar.txt", bar_construction(FULL_2_SHIFT))
    assert main(["transform", "--op", "transfer", "--in", path]) == 0
    assert "0 0 1 0 1" in capsys.readouterr().out


def test_unknown_operation_is_a_usage_error(tmp_path: Path) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    with pytest.raises(SystemExit) as excinfo:
        main(["transform", "--op", "twist", "--in", path])
    assert excinfo.value.code == 2


def test_conjugate(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "a.txt", BinaryMatrix.from_rows([[1, 1], [0, 1]]))
    assert main(["conjugate", "--in", path, "--perm", "2,1"]) == 0
    assert capsys.readouterr().out == "2\n1 0\n1 1\n"


def test_conjugate_bad_permutation(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    assert main(["conjugate", "--in", path, "--perm", "1,1"]) == 2
    assert capsys.readouterr().err.startswith("error: ")


# ---------------------------------------------------------------------------
# invariants / zeta / compare
# ---------------------------------------------------------------------------


def test_invariants_text(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    assert main(["invariants", "--in", path]) == 0
    out = capsys.readouterr().out
    assert "det(1-A):     -1" in out
    assert "class:        factors=[], rank=0, u=0, sign=-1" in out
    assert "irreducible:  true" in out


def test_invariants_json_reports_reducible_input(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "tri.txt", BinaryMatrix.from_rows([[1, 1], [0, 1]]))
    assert main(["invariants", "--in", path, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["irreducible"] is False
    assert payload["permutation"] is False
    assert payload["det_one_minus"] == 0
    assert payload["oriented_class"]["rank"] == 1
    assert payload["oriented_class"]["sign"] == 0


def test_zeta_json(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    assert main(["zeta", "--in", path, "--order", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["coefficients"] == [1, -2]
    assert payload["series"] == ["1", "2", "4", "8"]
    assert payload["periodic_points"] == [2, 4, 8, 16]
    assert payload["consistent"] is True


def test_zeta_text(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "bar.txt", bar_construction(FULL_2_SHIFT))
    assert main(["zeta", "--in", path]) == 0
    assert "det(1-zA):    1 - 3z + 4z^3 - z^4" in capsys.readouterr().out


def test_compare_json(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    a = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    b = _write(tmp_path, "bar.txt", bar_construction(FULL_2_SHIFT))
    assert main(["compare", "--a", a, "--b", b, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["isomorphic"] is True
    assert payload["coe"] is False
    assert payload["flip_coe"] is True


def test_compare_text(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    a = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    assert main(["--max-group-order", "100", "compare", "--a", a, "--b", a]) == 0
    out = capsys.readouterr().out
    assert "coe:" in out
    assert "false" not in out


def test_compare_reducible_input_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    a = _write(tmp_path, "two.txt", FULL_2_SHIFT)
    b = _write(tmp_path, "tri.txt", BinaryMatrix.from_rows([[1, 1], [0, 1]]))
    assert main(["compare", "--a", a, "--b", b]) == 2
    assert "reducible" in capsys.readouterr().err


def test_malformed_file_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 1\n1 2\n", encoding="utf-8")
    assert main(["invariants", "--in", str(path)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_undecodable_file_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "binary.txt"
    path.write_bytes(b"2\n1 1\n1 \xff\n")
    assert main(["invariants", "--in", str(path)]) == 2
    assert "not UTF-8" in capsys.readouterr().err


def test_transfer_of_too_small_matrix_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = _write(tmp_path, "three.txt", BinaryMatrix.from_rows([[0, 0, 0], [1, 1, 1], [0, 1, 1]]))
    assert main(["transform", "--op", "transfer", "--in", path]) == 2
    assert "N >= 1" in capsys.readouterr().err
