from __future__ import annotations

from pathlib import Path

import pytest

from ckmarkov.core.errors import MatrixFormatError
from ckmarkov.io.matrix_file import (
    edge_list,
    format_edge_list,
    format_matrix,
    parse_matrix,
    read_matrix,
    write_matrix,
)
from ckmarkov.surgery.binary import BinaryMatrix

GOLDEN = BinaryMatrix.from_rows([[1, 1], [1, 0]])


def test_parse_with_comments_and_blank_lines() -> None:
    text = "# golden mean shift\n2\n\n1 1\n# second row\n1 0\n"
    assert parse_matrix(text) == GOLDEN


def test_format_is_canonical() -> None:
    assert format_matrix(GOLDEN) == "2\n1 1\n1 0\n"
    assert format_matrix(parse_matrix("2\n1 1\n1 0\n")) == "2\n1 1\n1 0\n"


def test_write_then_read(tmp_path: Path) -> None:
    path = tmp_path / "golden.txt"
    write_matrix(GOLDEN, path)
    assert path.read_text(encoding="utf-8") == "2\n1 1\n1 0\n"
    assert read_matrix(path) == GOLDEN


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("", "empty"),
        ("# only a comment\n", "empty"),
        ("two\n1 1\n1 0\n", "line 1"),
        ("0\n", "line 1"),
        ("2\n1 1\n", "expected 2 matrix rows"),
        ("2\n1 1 1\n1 0\n", "line 2"),
        ("2\n1 1\n1 2\n", "line 3"),
        ("# header\n2\n1 x\n1 0\n", "line 3"),
    ],
)
def test_malformed_files(text: str, message: str) -> None:
    with pytest.raises(MatrixFormatError, match=message):
        parse_matrix(text)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(MatrixFormatError, match="cannot read"):
        read_matrix(tmp_path / "absent.txt")


def test_edge_list() -> None:
    assert edge_list(GOLDEN) == [(1, 1), (1, 2), (2, 1)]
    assert format_edge_list(GOLDEN) == "# 2 vertices, 3 edges\n1 -> 1\n1 -> 2\n2 -> 1\n"


def test_undecodable_file(tmp_path: Path) -> None:
    path = tmp_path / "binary.txt"
    path.write_bytes(b"2\n1 1\n1 \xff\n")
    with pytest.raises(MatrixFormatError, match="not UTF-8"):
        read_matrix(path)
