from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ckmarkov.core.errors import DimensionError
from ckmarkov.linalg.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SNFDecomposition:
    """U·M·V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dk, di >= 0."""

    u: IntMatrix
    v: IntMatrix
    d: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal()

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries greater than 1 (units and zeros excluded)."""
        return tuple(x for x in self.diagonal if x > 1)

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)

    def solve(self, target: Sequence[int]) -> tuple[int, ...] | None:
        """An integer x with M·x = target for the decomposed M, or None outside its column span."""
        if len(target) != self.d.rows:
            raise DimensionError(f"target of length {len(target)} does not fit {self.d.rows} rows")
        # M x = b  <=>  D (V^-1 x) = U b
        ub = self.u.apply(target)
        y = [0] * self.d.cols
        diag = self.diagonal
        for i, b in enumerate(ub):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if b != 0:
                    return None
            elif b % d:
                return None
            else:
                y[i] = b // d
        return self.v.apply(y)


class _Workspace:
    """Mutable D, U, V during the reduction. Row ops hit U, column ops hit V."""

    def __init__(self, m: IntMatrix) -> None:
        self.rows, self.cols = m.rows, m.cols
        self.d = m.to_rows()
        self.u = IntMatrix.identity(m.rows).to_rows()
        self.v = IntMatrix.identity(m.cols).to_rows()

    def swap_rows(self, i: int, k: int) -> None:
        if i != k:
            self.d[i], self.d[k] = self.d[k], self.d[i]
            self.u[i], self.u[k] = self.u[k], self.u[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j == k:
            return
        for mat in (self.d, self.v):
            for row in mat:
                row[j], row[k] = row[k], row[j]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]"""
        for mat in (self.d, self.u):
            src, dst = mat[source], mat[target]
            for j in range(len(dst)):
                dst[j] += q * src[j]

    def add_col(self, target: int, source: int, q: int) -> None:
        """col[target] += q * col[source]"""
        for mat in (self.d, self.v):
            for row in mat:
                row[target] += q * row[source]

    def negate_row(self, i: int) -> None:
        for mat in (self.d, self.u):
            mat[i] = [-x for x in mat[i]]

    def min_pivot(self, t: int) -> tuple[int, int] | None:
        """Nonzero entry of least |value| in the trailing block; ties go to the lowest (row, col)."""
        best: tuple[int, int] | None = None
        best_abs = 0
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                x = abs(self.d[i][j])
                if x and (best is None or x < best_abs):
                    best, best_abs = (i, j), x
        return best


def smith_normal_form(m: IntMatrix) -> SNFDecomposition:
    """Smith normal form with transforms; deterministic for a fixed input."""
    ws = _Workspace(m)
    for t in range(min(ws.rows, ws.cols)):
        while True:
            pos = ws.min_pivot(t)
            if pos is None:
                return _finish(m, ws)
            ws.swap_rows(t, pos[0])
            ws.swap_cols(t, pos[1])
            pivot = ws.d[t][t]

            clean = True
            for i in range(t + 1, ws.rows):
                if ws.d[i][t]:
                    ws.add_row(i, t, -(ws.d[i][t] // pivot))
                    clean = clean and ws.d[i][t] == 0
            for j in range(t + 1, ws.cols):
                if ws.d[t][j]:
                    ws.add_col(j, t, -(ws.d[t][j] // pivot))
                    clean = clean and ws.d[t][j] == 0
            if not clean:
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, ws.rows)
                    for j in range(t + 1, ws.cols)
                    if ws.d[i][j] % pivot
                ),
                None,
            )
            if offender is None:
                break
            # pull the non-divisible row into the pivot row and reduce again
            ws.add_row(t, offender, 1)

        if ws.d[t][t] < 0:
            ws.negate_row(t)
        logger.debug("smith.pivot", extra={"index": t, "value": ws.d[t][t]})
    return _finish(m, ws)


def _finish(m: IntMatrix, ws: _Workspace) -> SNFDecomposition:
    return SNFDecomposition(
        u=IntMatrix.from_rows(ws.u),
        v=IntMatrix.from_rows(ws.v),
        d=IntMatrix.from_rows(ws.d),
    )


def solve_in_span(m: IntMatrix, target: Sequence[int]) -> tuple[int, ...] | None:
    """An integer x with M·x = target, or None when target is outside the column span of M over Z."""
    return smith_normal_form(m).solve(target)
