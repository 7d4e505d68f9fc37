from __future__ import annotations

import logging
from pathlib import Path

from ckmarkov.core.errors import BinaryEntryError, DimensionError, MatrixFormatError
from ckmarkov.surgery.binary import BinaryMatrix

logger = logging.getLogger(__name__)

_COMMENT = "#"


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped text) for every non-blank, non-comment line."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith(_COMMENT):
            out.append((number, line))
    return out


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the text format: a line holding N, then N lines of N entries in {0, 1}.

    Lines starting with '#' and blank lines are ignored. Errors name the offending line.
    """
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("empty matrix file: expected the size N on the first line")

    number, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise MatrixFormatError(f"line {number}: expected the size N, got {header!r}") from None
    if n < 1:
        raise MatrixFormatError(f"line {number}: size must be >= 1, got {n}")

    body = lines[1:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} matrix rows after line {number}, found {len(body)}")

    rows: list[list[int]] = []
    for number, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(f"line {number}: expected {n} entries, got {len(tokens)}")
        if any(t not in ("0", "1") for t in tokens):
            raise MatrixFormatError(f"line {number}: entries must be 0 or 1, got {line!r}")
        rows.append([int(t) for t in tokens])

    try:
        return BinaryMatrix.from_rows(rows)
    except (DimensionError, BinaryEntryError) as exc:
        raise MatrixFormatError(str(exc)) from exc


def format_matrix(a: BinaryMatrix) -> str:
    """Inverse of parse_matrix (comments are not preserved)."""
    lines = [str(a.size)] + [" ".join(str(x) for x in a.row(i)) for i in range(a.size)]
    return "\n".join(lines) + "\n"


def read_matrix(path: str | Path) -> BinaryMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise MatrixFormatError(f"{path} is not UTF-8 text: byte {exc.start}") from exc
    a = parse_matrix(text)
    logger.debug("matrix_file.read", extra={"path": str(path), "size": a.size})
    return a


def write_matrix(a: BinaryMatrix, path: str | Path) -> None:
    path = Path(path)
    path.write_text(format_matrix(a), encoding="utf-8")
    logger.debug("matrix_file.write", extra={"path": str(path), "size": a.size})


def edge_list(a: BinaryMatrix) -> list[tuple[int, int]]:
    """1-based (source, target) pairs of the graph of A, row-major."""
    return a.edges()


def format_edge_list(a: BinaryMatrix) -> str:
    header = f"# {a.size} vertices, {len(a.edges())} edges"
    return "\n".join([header] + [f"{i} -> {j}" for i, j in edge_list(a)]) + "\n"
