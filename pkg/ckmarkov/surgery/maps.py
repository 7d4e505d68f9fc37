from __future__ import annotations

import logging
from collections.abc import Sequence

from ckmarkov.core.errors import DimensionError
from ckmarkov.groups.abelian import cokernel_group, project_element
from ckmarkov.surgery.binary import BinaryMatrix
from ckmarkov.surgery.constructions import bar_construction

logger = logging.getLogger(__name__)


def eta_map(x: Sequence[int]) -> tuple[int, ...]:
    """Z^{N+1} -> Z^N, summing the last two coordinates. Induces G(A°) ≅ G(A)."""
    if len(x) < 2:
        raise DimensionError(f"eta_map needs a vector of length N+1 >= 2, got {len(x)}")
    return tuple(x[:-2]) + (x[-2] + x[-1],)


def eta_section(x: Sequence[int]) -> tuple[int, ...]:
    """Z^N -> Z^{N+1}, appending 0; eta_map(eta_section(x)) == x."""
    if not x:
        raise DimensionError("eta_section needs a vector of length N >= 1")
    return tuple(x) + (0,)


def xi_map(x: Sequence[int]) -> tuple[int, ...]:
    """Z^N -> Z^{N+2}, appending two zeros. Induces G(A) ≅ G(A₋)."""
    if not x:
        raise DimensionError("xi_map needs a vector of length N >= 1")
    return tuple(x) + (0, 0)


def xi_retraction(x: Sequence[int]) -> tuple[int, ...]:
    """Z^{N+2} -> Z^N with [x] = [xi_map(xi_retraction(x))] in G(A₋)."""
    if len(x) < 3:
        raise DimensionError(f"xi_retraction needs a vector of length N+2 >= 3, got {len(x)}")
    head = tuple(x[:-3])
    return head + (x[-3] - x[-1],)


def xi_witness(y: Sequence[int]) -> tuple[int, ...]:
    """The vector w with (1 - A₋ᵗ)·w = xi_map((1 - Aᵗ)·y), for every A of size len(y)."""
    if not y:
        raise DimensionError("xi_witness needs a vector of length N >= 1")
    return tuple(y) + (0, -y[-1])


def phi_map(x: Sequence[int]) -> tuple[int, ...]:
    """Representative-level Φ: Z^N -> Z^{N+3}, the composite xi_map ∘ eta_section."""
    return xi_map(eta_section(x))


def phi_check(a: BinaryMatrix) -> bool:
    """Whether Φ carries u_A to u_Ā: the class of (1,…,1,0,0,0) equals [(1,…,1)] in G(Ā)."""
    n = a.size
    bar = bar_construction(a)
    group = cokernel_group(bar.transpose().one_minus())
    image = project_element(group, phi_map([1] * n))
    unit = project_element(group, [1] * (n + 3))
    ok = image == unit
    logger.debug("maps.phi_check", extra={"n": n, "group": str(group), "ok": ok})
    return ok
