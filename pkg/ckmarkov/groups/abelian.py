from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ckmarkov.core.errors import DimensionError
from ckmarkov.linalg.matrix import IntMatrix
from ckmarkov.linalg.smith import smith_normal_form


@dataclass(frozen=True)
class GroupElement:
    """Canonical coordinates: torsion part (reduced mod each factor) then free part."""

    torsion_coords: tuple[int, ...]
    free_coords: tuple[int, ...] = ()

    @property
    def coords(self) -> tuple[int, ...]:
        return self.torsion_coords + self.free_coords

    def __str__(self) -> str:
        coords = self.coords
        if not any(coords):
            return "0"
        return "(" + ",".join(str(c) for c in coords) + ")"


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z/d1 + ... + Z/dk + Z^r with d1 | d2 | ... | dk, each di >= 2.

    `basis_map` holds one row per canonical coordinate (torsion first, then
    free): the rows of the SNF transform U that turn a presentation vector
    into canonical coordinates. `presentation_dim` is the length of vectors
    accepted by project_element.
    """

    torsion: tuple[int, ...]
    free_rank: int
    basis_map: tuple[tuple[int, ...], ...] = ()
    presentation_dim: int = 0

    def __post_init__(self) -> None:
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors {self.torsion} break the divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"invariant factors must be >= 2, got {self.torsion}")
        if self.free_rank < 0:
            raise ValueError(f"free rank must be >= 0, got {self.free_rank}")

    @classmethod
    def from_factors(cls, torsion: Sequence[int], free_rank: int = 0) -> FgAbelianGroup:
        """Abstract group with identity basis map (presentation = canonical coordinates)."""
        k = len(torsion) + free_rank
        basis = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
        return cls(tuple(torsion), free_rank, basis, k)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | float:
        return math.prod(self.torsion) if self.is_finite else math.inf

    @property
    def exponent(self) -> int:
        """Exponent of the torsion subgroup."""
        return self.torsion[-1] if self.torsion else 1

    @property
    def type_key(self) -> tuple[tuple[int, ...], int]:
        return self.torsion, self.free_rank

    # ------------------------------------------------------------------
    # Element arithmetic
    # ------------------------------------------------------------------

    def element(self, torsion_coords: Sequence[int], free_coords: Sequence[int] = ()) -> GroupElement:
        if len(torsion_coords) != len(self.torsion) or len(free_coords) != self.free_rank:
            raise DimensionError(
                f"element needs {len(self.torsion)} torsion and {self.free_rank} free coordinates"
            )
        return GroupElement(
            tuple(c % d for c, d in zip(torsion_coords, self.torsion)),
            tuple(free_coords),
        )

    def zero(self) -> GroupElement:
        return GroupElement((0,) * len(self.torsion), (0,) * self.free_rank)

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.element(
            [a + b for a, b in zip(g.torsion_coords, h.torsion_coords)],
            [a + b for a, b in zip(g.free_coords, h.free_coords)],
        )

    def scale(self, n: int, g: GroupElement) -> GroupElement:
        return self.element([n * c for c in g.torsion_coords], [n * c for c in g.free_coords])

    def contains(self, g: GroupElement) -> bool:
        return (
            len(g.torsion_coords) == len(self.torsion)
            and len(g.free_coords) == self.free_rank
            and all(0 <= c < d for c, d in zip(g.torsion_coords, self.torsion))
        )

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite group in lexicographic coordinate order."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        for coords in itertools.product(*(range(d) for d in self.torsion)):
            yield GroupElement(tuple(coords), ())

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PointedGroup:
    group: FgAbelianGroup
    point: GroupElement

    def __post_init__(self) -> None:
        if not self.group.contains(self.point):
            raise DimensionError(f"point {self.point} is not a canonical element of {self.group}")


def cokernel_group(m: IntMatrix) -> FgAbelianGroup:
    """Z^rows / M Z^cols with the canonical basis map taken from the Smith form."""
    snf = smith_normal_form(m)
    diag = snf.diagonal
    torsion: list[int] = []
    torsion_rows: list[tuple[int, ...]] = []
    free_rows: list[tuple[int, ...]] = []
    for i in range(m.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        if d == 0:
            free_rows.append(snf.u.row(i))
        else:
            torsion.append(d)
            torsion_rows.append(snf.u.row(i))
    return FgAbelianGroup(
        torsion=tuple(torsion),
        free_rank=len(free_rows),
        basis_map=tuple(torsion_rows + free_rows),
        presentation_dim=m.rows,
    )


def project_element(group: FgAbelianGroup, v: Sequence[int]) -> GroupElement:
    """Canonical coordinates of the class [v]."""
    if len(v) != group.presentation_dim:
        raise DimensionError(
            f"vector of length {len(v)} does not fit presentation dimension {group.presentation_dim}"
        )
    coords = [sum(a * b for a, b in zip(row, v)) for row in group.basis_map]
    k = len(group.torsion)
    return group.element(coords[:k], coords[k:])


def element_order(group: FgAbelianGroup, g: GroupElement) -> int | float:
    """Least n >= 1 with n·g = 0, or math.inf."""
    if any(g.free_coords):
        return math.inf
    return math.lcm(1, *(d // math.gcd(d, c) for c, d in zip(g.torsion_coords, group.torsion)))


def groups_isomorphic(g: FgAbelianGroup, h: FgAbelianGroup) -> bool:
    return g.type_key == h.type_key


def abelian_groups_up_to(order: int) -> Iterator[FgAbelianGroup]:
    """One finite abelian group per isomorphism type with |G| <= order, trivial group first."""

    def chains(prefix: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        last = prefix[-1] if prefix else 1
        for d in range(max(2, last), order // size + 1):
            if d % last == 0:
                yield from chains(prefix + (d,), size * d)

    for torsion in chains((), 1):
        yield FgAbelianGroup.from_factors(torsion)
