from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ckmarkov.core.errors import BinaryEntryError, DimensionError
from ckmarkov.linalg.matrix import IntMatrix


@dataclass(frozen=True)
class BinaryMatrix(IntMatrix):
    """Square 0/1 transition matrix of a shift of finite type."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.rows != self.cols:
            raise DimensionError(f"transition matrix must be square, got {self.rows}x{self.cols}")
        for k, x in enumerate(self.entries):
            if x not in (0, 1):
                i, j = divmod(k, self.cols)
                raise BinaryEntryError(f"entry ({i + 1},{j + 1}) is {x}, expected 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BinaryMatrix:
        m = IntMatrix.from_rows(rows)
        return cls(m.rows, m.cols, m.entries)

    @property
    def size(self) -> int:
        return self.rows

    def edges(self) -> list[tuple[int, int]]:
        """Edges i -> j (1-based) of the graph with adjacency matrix A."""
        n = self.size
        return [(i + 1, j + 1) for i in range(n) for j in range(n) if self[i, j]]
