from __future__ import annotations

import logging

from ckmarkov.core.errors import DimensionError
from ckmarkov.linalg.matrix import IntMatrix
from ckmarkov.linalg.polynomial import Polynomial

logger = logging.getLogger(__name__)


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m.require_square("det")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # look for a pivot in column k; none means det == 0
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_one_minus(a: IntMatrix) -> int:
    """det(1 - A)."""
    return det(a.one_minus())


def char_denominator(a: IntMatrix) -> Polynomial:
    """The polynomial det(1 - zA), found by exact interpolation of det(1 - tA) at t = 0..N."""
    a.require_square("det(1 - zA)")
    n = a.rows
    points = list(range(n + 1))
    values = [det(IntMatrix.identity(n) - a.scale(t)) for t in points]
    poly = Polynomial.interpolate(points, values)
    logger.debug("determinant.char_denominator", extra={"size": n, "degree": poly.degree})
    return poly


def mat_power(a: IntMatrix, n: int) -> IntMatrix:
    """A**n by repeated squaring, n >= 0."""
    a.require_square("matrix power")
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    result = IntMatrix.identity(a.rows)
    base = a
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def mat_power_trace(a: IntMatrix, n: int) -> int:
    """trace(A**n) for n >= 1."""
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if not a.is_square:
        raise DimensionError(f"trace of a power needs a square matrix, got {a.rows}x{a.cols}")
    return mat_power(a, n).trace()
