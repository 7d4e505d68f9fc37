from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class GroupModel(BaseModel):
    factors: list[int]  # invariant factors, ascending
    rank: int = Field(ge=0)
    text: str


class OrientedClassResponse(BaseModel):
    factors: list[int]
    rank: int = Field(ge=0)
    u: list[int]  # torsion coordinates, then free coordinates
    sign: Literal[-1, 0, 1]
    text: str


class InvariantsResponse(BaseModel):
    size: int = Field(ge=1)
    group: GroupModel
    oriented_class: OrientedClassResponse
    det_one_minus: int
    irreducible: bool
    permutation: bool
    bowen_franks: GroupModel
