from __future__ import annotations

from pydantic import BaseModel, Field


class ZetaResponse(BaseModel):
    coefficients: list[int]  # index i = coefficient of z^i in det(1 - zA)
    polynomial: str
    order: int = Field(gt=0)
    series: list[str]  # zeta coefficients as exact fractions
    periodic_points: list[int]  # p_1 .. p_order
    consistent: bool | None = None
