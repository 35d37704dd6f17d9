from __future__ import annotations

from math import isfinite
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


class Vector2(BaseModel):
    """A point (x1, x2) of the real plane."""

    model_config = ConfigDict(frozen=True)

    x1: float
    x2: float

    @field_validator('x1', 'x2')
    @classmethod
    def finite_component(cls, value: float) -> float:
        if not isfinite(value):
            raise ValueError(f'Vector components must be finite, got {value}')
        return float(value)

    @classmethod
    def of(cls, values: Sequence[float]) -> Vector2:
        return cls(x1=float(values[0]), x2=float(values[1]))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x1, self.x2], dtype=float)

    def is_zero(self) -> bool:
        return self.x1 == 0.0 and self.x2 == 0.0

    def __neg__(self) -> Vector2:
        return Vector2(x1=-self.x1, x2=-self.x2)

    def as_list(self) -> list:
        return [self.x1, self.x2]


class UnitVector(BaseModel):
    """A point of the unit sphere together with the angle it was generated from."""

    model_config = ConfigDict(frozen=True)

    theta: float
    """Parameter angle in [0, 2π): the point is the radial projection of (cos θ, sin θ)."""

    point: Vector2

    @property
    def array(self) -> np.ndarray:
        return self.point.array
