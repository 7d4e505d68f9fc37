from __future__ import annotations

from ckmarkov.dynamics.graph import is_irreducible, is_permutation_matrix, predecessors, successors
from ckmarkov.surgery.binary import BinaryMatrix


def _b(rows: list[list[int]]) -> BinaryMatrix:
    return BinaryMatrix.from_rows(rows)


def test_full_shift_is_irreducible() -> None:
    assert is_irreducible(_b([[1, 1], [1, 1]]))


def test_triangular_matrix_is_reducible() -> None:
    assert not is_irreducible(_b([[1, 1], [0, 1]]))


def test_single_vertex_needs_a_loop() -> None:
    assert is_irreducible(_b([[1]]))
    assert not is_irreducible(_b([[0]]))


def test_cycle_is_irreducible_permutation() -> None:
    cycle = _b([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert is_irreducible(cycle)
    assert is_permutation_matrix(cycle)


def test_permutation_flag() -> None:
    assert is_permutation_matrix(_b([[1]]))
    assert not is_permutation_matrix(_b([[1, 1], [1, 0]]))
    assert not is_permutation_matrix(_b([[0, 0], [0, 0]]))


def test_two_components_are_reducible() -> None:
    assert not is_irreducible(_b([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]))


def test_adjacency_lists() -> None:
    a = _b([[0, 1], [1, 1]])
    assert successors(a) == [[1], [0, 1]]
    assert predecessors(a) == [[1], [0, 1]]
