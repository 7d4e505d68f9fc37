from __future__ import annotations

import logging
from dataclasses import dataclass

from ckmarkov.core.errors import DomainError
from ckmarkov.dynamics.graph import is_irreducible, is_permutation_matrix
from ckmarkov.groups.abelian import (
    FgAbelianGroup,
    GroupElement,
    PointedGroup,
    cokernel_group,
    project_element,
)
from ckmarkov.linalg.determinant import det_one_minus
from ckmarkov.surgery.binary import BinaryMatrix

logger = logging.getLogger(__name__)

_ASSUMPTION = "matrices are assumed irreducible and not permutation matrices"


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class InvariantTriple:
    """(G(A), u_A, sgn det(1 - A)), the complete invariant of continuous orbit equivalence."""

    group: FgAbelianGroup
    u: GroupElement
    sign: int
    determinant: int

    def __post_init__(self) -> None:
        if (self.sign == 0) != (not self.group.is_finite):
            raise ValueError(f"sign {self.sign} is inconsistent with group {self.group}")

    @property
    def pointed(self) -> PointedGroup:
        return PointedGroup(self.group, self.u)


def require_classifiable(a: BinaryMatrix, label: str = "A") -> None:
    if not is_irreducible(a):
        raise DomainError(f"{label} is reducible; {_ASSUMPTION}")
    if is_permutation_matrix(a):
        raise DomainError(f"{label} is a permutation matrix; {_ASSUMPTION}")


def k0_group(a: BinaryMatrix) -> FgAbelianGroup:
    """G(A) = Z^N / (1 - Aᵗ) Z^N."""
    return cokernel_group(a.transpose().one_minus())


def unit_class(a: BinaryMatrix, group: FgAbelianGroup | None = None) -> GroupElement:
    """u_A, the class of (1, …, 1) in G(A)."""
    group = k0_group(a) if group is None else group
    return project_element(group, [1] * a.size)


def invariant_triple(a: BinaryMatrix, label: str = "A", *, validate: bool = True) -> InvariantTriple:
    """(G(A), u_A, sgn det(1 - A)); validate=False skips the irreducibility checks."""
    if validate:
        require_classifiable(a, label)
    group = k0_group(a)
    d = det_one_minus(a)
    triple = InvariantTriple(group=group, u=unit_class(a, group), sign=_sgn(d), determinant=d)
    logger.debug(
        "invariants.triple",
        extra={"label": label, "group": str(group), "u": str(triple.u), "det": d},
    )
    return triple


def bowen_franks(a: BinaryMatrix) -> FgAbelianGroup:
    """BF(A) = G(Aᵗ) = Z^N / (1 - A) Z^N."""
    return cokernel_group(a.one_minus())


def oriented_point(triple: InvariantTriple) -> GroupElement:
    """The distinguished element with its free part oriented; same Aut-orbit as u."""
    # negation of the free summands is an automorphism
    free = triple.u.free_coords
    lead = next((f for f in free if f), 0)
    if lead < 0:
        return GroupElement(triple.u.torsion_coords, tuple(-f for f in free))
    return triple.u


def render_oriented(triple: InvariantTriple) -> str:
    point = oriented_point(triple)
    factors = ",".join(str(d) for d in triple.group.torsion)
    sign = {1: "+1", 0: "0", -1: "-1"}[triple.sign]
    return f"factors=[{factors}], rank={triple.group.free_rank}, u={point}, sign={sign}"


def oriented_class(a: BinaryMatrix) -> str:
    """Canonical text of the oriented class: factors, rank, u, sign."""
    return render_oriented(invariant_triple(a))
