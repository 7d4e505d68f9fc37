from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ckmarkov.core.errors import NonIntegralError


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in z; coefficients[i] is the coefficient of z**i.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> Polynomial:
        return cls(tuple(coeffs))

    @classmethod
    def interpolate(cls, points: Sequence[int], values: Sequence[int]) -> Polynomial:
        """Exact interpolation through (points[k], values[k]) by Newton divided differences.

        Raises NonIntegralError if the interpolant has a non-integer coefficient.
        """
        n = len(points)
        table = [Fraction(v) for v in values]
        newton = [table[0]]
        for level in range(1, n):
            table = [
                (table[k + 1] - table[k]) / (points[k + level] - points[k])
                for k in range(n - level)
            ]
            newton.append(table[0])

        # Expand the Newton form back into the monomial basis (Horner, from the top).
        coeffs: list[Fraction] = [Fraction(0)]
        for k in range(n - 1, -1, -1):
            # coeffs <- coeffs * (z - points[k]) + newton[k]
            shifted = [Fraction(0)] + coeffs
            for i, c in enumerate(coeffs):
                shifted[i] -= points[k] * c
            shifted[0] += newton[k]
            coeffs = shifted

        ints: list[int] = []
        for i, c in enumerate(coeffs):
            if c.denominator != 1:
                raise NonIntegralError(f"interpolated coefficient of z^{i} is {c}, not an integer")
            ints.append(int(c))
        return cls(tuple(ints))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, z: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "z" if i == 1 else f"z^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)
