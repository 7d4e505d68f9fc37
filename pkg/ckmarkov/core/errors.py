from __future__ import annotations


class CkMarkovError(Exception):
    """Base class for every error raised by ckmarkov."""


class DimensionError(CkMarkovError, ValueError):
    """Shape mismatch: non-square input, wrong vector length, ragged rows."""


class BinaryEntryError(CkMarkovError, ValueError):
    """A transition matrix entry outside {0, 1}."""


class PermutationError(CkMarkovError, ValueError):
    """A vertex relabelling that is not a bijection of {1..N}."""


class BoundExceededError(CkMarkovError):
    """A brute-force search was asked to run past the configured group order."""


class StructureError(CkMarkovError, ValueError):
    """Input does not have the block shape an operation requires."""


class DomainError(CkMarkovError, ValueError):
    """Classification input violates the irreducible / non-permutation assumption."""


class MatrixFormatError(CkMarkovError, ValueError):
    """Malformed matrix text file."""


class NonIntegralError(CkMarkovError, ArithmeticError):
    """An exact computation expected to land in Z produced a proper fraction."""
