from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ckmarkov.core.errors import DimensionError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    Entries are Python ints, so arithmetic never overflows.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries for {self.rows}x{self.cols}, "
                f"got {len(self.entries)}"
            )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionError(f"row {i + 1} has {len(row)} entries, expected {width}")
        return cls(len(rows), width, tuple(int(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def trace(self) -> int:
        self.require_square("trace")
        return sum(self.diagonal())

    def require_square(self, op: str) -> None:
        if not self.is_square:
            raise DimensionError(f"{op} needs a square matrix, got {self.rows}x{self.cols}")

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._require_same_shape(other, "+")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._require_same_shape(other, "-")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), col))
                for i in range(self.rows)
                for col in cols
            ),
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Return M·v for a column vector v."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} does not fit {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def one_minus(self) -> IntMatrix:
        """1 − M for square M."""
        self.require_square("1 - M")
        return IntMatrix.identity(self.rows) - self

    def _require_same_shape(self, other: IntMatrix, op: str) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch for '{op}': {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
