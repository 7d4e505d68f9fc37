from __future__ import annotations

from fractions import Fraction

import pytest

from ckmarkov.core.errors import NonIntegralError
from ckmarkov.linalg.polynomial import Polynomial


def test_trailing_zeros_are_trimmed() -> None:
    p = Polynomial.from_coefficients([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1


def test_zero_polynomial() -> None:
    zero = Polynomial.from_coefficients([0, 0])
    assert zero.coefficients == ()
    assert zero.degree == -1
    assert str(zero) == "0"


def test_interpolate_recovers_quadratic() -> None:
    assert Polynomial.interpolate([0, 1, 2], [1, 3, 7]).coefficients == (1, 1, 1)


def test_interpolate_rejects_fractional_coefficients() -> None:
    with pytest.raises(NonIntegralError):
        Polynomial.interpolate([0, 2], [0, 1])


def test_evaluation() -> None:
    p = Polynomial.from_coefficients([1, -3, 0, 4, -1])
    assert p(1) == 1
    assert p(0) == 1
    assert p(Fraction(1, 2)) == Fraction(1) - Fraction(3, 2) + Fraction(1, 2) - Fraction(1, 16)


def test_str_formats_signs_and_powers() -> None:
    assert str(Polynomial.from_coefficients([1, -2, -2, 4])) == "1 - 2z - 2z^2 + 4z^3"
    assert str(Polynomial.from_coefficients([0, 1])) == "z"
    assert str(Polynomial.from_coefficients([-1, 0, -1])) == "-1 - z^2"
