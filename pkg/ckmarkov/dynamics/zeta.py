from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ckmarkov.config import settings
from ckmarkov.linalg.determinant import char_denominator, mat_power_trace
from ckmarkov.linalg.polynomial import Polynomial
from ckmarkov.surgery.binary import BinaryMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalSeries:
    """Power series in z with exact rational coefficients, known modulo z**order."""

    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, order: int) -> RationalSeries:
        return cls(tuple(Fraction(poly.coefficient(i)) for i in range(order)))

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return RationalSeries(
            tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order))
        )

    def inverse(self) -> RationalSeries:
        """Multiplicative inverse to the same order; needs a nonzero constant term."""
        c = self.coefficients
        if not c or c[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv = [1 / c[0]]
        for k in range(1, self.order):
            acc = sum((c[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv.append(-acc / c[0])
        return RationalSeries(tuple(inv))

    def exp(self) -> RationalSeries:
        """exp(f) for f with zero constant term, via E' = f'·E."""
        f = self.coefficients
        if f and f[0] != 0:
            raise ValueError("exp is only taken of series without constant term")
        e = [Fraction(1)]
        for k in range(1, self.order):
            # k·e_k = sum_{j=1..k} j·f_j·e_{k-j}
            acc = sum((j * f[j] * e[k - j] for j in range(1, k + 1)), Fraction(0))
            e.append(acc / k)
        return RationalSeries(tuple(e[: self.order]))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}z^{i}")
        return " + ".join(terms) + f" + O(z^{self.order})"


class ConjugacyEvidence(str, Enum):
    DISTINGUISHED = "distinguished"
    INCONCLUSIVE = "inconclusive"


def periodic_point_count(a: BinaryMatrix, n: int) -> int:
    """p_n = trace(Aⁿ), the number of points of period n of the two-sided shift."""
    return mat_power_trace(a, n)


def zeta_series(a: BinaryMatrix, order: int | None = None) -> RationalSeries:
    """exp(Σ p_n zⁿ / n) modulo z**order."""
    order = settings.zeta_order if order is None else order
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    log_terms = [Fraction(0)] + [
        Fraction(periodic_point_count(a, n), n) for n in range(1, order)
    ]
    return RationalSeries(tuple(log_terms[:order])).exp()


def zeta_consistency(a: BinaryMatrix, order: int | None = None) -> bool:
    """Whether exp(Σ p_n zⁿ/n) and 1/det(1 - zA) agree modulo z**order."""
    order = settings.zeta_order if order is None else order
    series = zeta_series(a, order)
    inverse = RationalSeries.from_polynomial(char_denominator(a), order).inverse()
    ok = series == inverse
    if not ok:
        logger.warning("zeta.inconsistent", extra={"size": a.size, "order": order})
    return ok


def conjugacy_distinguisher(a: BinaryMatrix, b: BinaryMatrix) -> ConjugacyEvidence:
    """Different zeta functions rule out topological conjugacy; equal ones say nothing."""
    if char_denominator(a) != char_denominator(b):
        return ConjugacyEvidence.DISTINGUISHED
    return ConjugacyEvidence.INCONCLUSIVE
