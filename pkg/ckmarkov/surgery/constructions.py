from __future__ import annotations

import logging
from collections.abc import Sequence

from ckmarkov.core.errors import DomainError, PermutationError, StructureError
from ckmarkov.linalg.determinant import det_one_minus
from ckmarkov.surgery.binary import BinaryMatrix

logger = logging.getLogger(__name__)


def _grid(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def cuntz_splice(a: BinaryMatrix) -> BinaryMatrix:
    """A₋: attach the two-vertex gadget at the last vertex (size N+2)."""
    n = a.size
    out = _grid(n + 2)
    for i in range(n):
        out[i][:n] = a.row(i)
    out[n - 1][n] = 1
    out[n][n - 1:n + 2] = [1, 1, 1]
    out[n + 1][n:n + 2] = [1, 1]
    return BinaryMatrix.from_rows(out)


def ps_expansion(a: BinaryMatrix) -> BinaryMatrix:
    """A°: the Parry–Sullivan expansion inserting a vertex behind vertex N (size N+1).

    Row N becomes the single edge N -> N+1, and the new vertex N+1 inherits
    the old outgoing edges of N.
    """
    n = a.size
    out = _grid(n + 1)
    for i in range(n - 1):
        out[i][:n] = a.row(i)
    out[n - 1][n] = 1
    out[n][:n] = a.row(n - 1)
    return BinaryMatrix.from_rows(out)


def bar_construction(a: BinaryMatrix) -> BinaryMatrix:
    """Ā, written out block by block (size N+3). Equal to cuntz_splice(ps_expansion(A))."""
    n = a.size
    out = _grid(n + 3)
    for i in range(n - 1):
        out[i][:n] = a.row(i)
    out[n - 1][n] = 1                       # v_N -> v_{N+1}
    out[n][:n] = a.row(n - 1)               # v_{N+1} inherits row N of A
    out[n][n + 1] = 1                       # v_{N+1} -> v_{N+2}
    out[n + 1][n:n + 3] = [1, 1, 1]
    out[n + 2][n + 1:n + 3] = [1, 1]
    return BinaryMatrix.from_rows(out)


def tilde_construction(a: BinaryMatrix) -> BinaryMatrix:
    """Ã: Ā with the loop at vertex N+2 removed."""
    n = a.size
    out = _grid(n + 3)
    for i in range(n - 1):
        out[i][:n] = a.row(i)
    out[n - 1][n] = 1
    out[n][:n] = a.row(n - 1)
    out[n][n + 1] = 1
    out[n + 1][n] = 1
    out[n + 1][n + 2] = 1
    out[n + 2][n + 1:n + 3] = [1, 1]
    return BinaryMatrix.from_rows(out)


def primitive_transfer_bar_to_tilde(bar: BinaryMatrix, n: int) -> BinaryMatrix:
    """Replace row N+2 = E_{N+1} + row N+3 of a bar matrix by E_{N+1} + E_{N+3}."""
    if n < 1:
        raise StructureError(f"a bar matrix needs N >= 1, got N={n}")
    if bar.size != n + 3:
        raise StructureError(f"a bar matrix for N={n} has size {n + 3}, got {bar.size}")
    size = bar.size
    e_n1 = [1 if j == n else 0 for j in range(size)]      # E_{N+1}
    e_n3 = [1 if j == n + 2 else 0 for j in range(size)]  # E_{N+3}
    row_n2, row_n3 = list(bar.row(n + 1)), list(bar.row(n + 2))
    if row_n2 != [x + y for x, y in zip(e_n1, row_n3)]:
        raise StructureError(f"row {n + 2} is not E_{n + 1} + row {n + 3}; input is not a bar matrix")
    rows = bar.to_rows()
    rows[n + 1] = [x + y for x, y in zip(e_n1, e_n3)]
    logger.debug("constructions.primitive_transfer", extra={"n": n})
    return BinaryMatrix.from_rows(rows)


def permutation_conjugate(a: BinaryMatrix, perm: Sequence[int]) -> BinaryMatrix:
    """P A P⁻¹ for the permutation i -> perm[i-1] (1-based image list).

    Vertex i is relabelled perm(i), so (PAP⁻¹)(perm(i), perm(j)) = A(i, j).
    """
    n = a.size
    if sorted(perm) != list(range(1, n + 1)):
        raise PermutationError(f"{list(perm)} is not a permutation of 1..{n}")
    out = _grid(n)
    for i in range(n):
        for j in range(n):
            out[perm[i] - 1][perm[j] - 1] = a[i, j]
    return BinaryMatrix.from_rows(out)


def match_orientation(a: BinaryMatrix, sign: int) -> BinaryMatrix:
    """A itself when sgn det(1−A) already equals `sign`, otherwise Ā.

    Ā has the same pointed group as A and the opposite determinant, so
    between them every sign compatible with G(A) is realised.
    """
    if sign not in (-1, 0, 1):
        raise ValueError(f"sign must be -1, 0 or 1, got {sign}")
    d = det_one_minus(a)
    current = (d > 0) - (d < 0)
    if current == sign:
        return a
    if current == 0 or sign == 0:
        raise DomainError(
            "sign 0 occurs exactly when G(A) is infinite; "
            f"det(1-A) = {d} cannot be re-oriented to {sign}"
        )
    return bar_construction(a)
