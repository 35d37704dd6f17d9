from __future__ import annotations

from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from banachlib.normed_plane import UnitVector


class Relation(Enum):
    BIRKHOFF = 'birkhoff'
    ISOSCELES = 'isosceles'
    SKEW_ISOSCELES = 'skew-isosceles'
    ROBERTS = 'roberts'


class LineMinimum(BaseModel):
    """Minimum of λ ↦ ||x + λy|| over the real line."""

    model_config = ConfigDict(frozen=True)

    lambda_star: float
    """
    A minimiser. When the minimum is attained on a whole interval (flat pieces of polygonal
    spheres) this is an arbitrary point of that interval and `flat` is set.
    """

    value: float
    flat: bool = False


class OrthoPair(BaseModel):
    """Two unit vectors accepted as orthogonal, with the defect measured at acceptance."""

    model_config = ConfigDict(frozen=True)

    x: UnitVector
    y: UnitVector
    relation: Relation
    t: Optional[float] = None
    """Parameter of skew isosceles orthogonality, None for the other relations."""

    defect: float
    tolerance: float


class MateCone(BaseModel):
    """Directions y(φ), φ in [phi_lo, phi_hi], Birkhoff orthogonal to x (modulo the sign of y).

    phi_hi may exceed π when the cone wraps around the direction φ = 0.
    """

    model_config = ConfigDict(frozen=True)

    x: UnitVector
    phi_lo: float
    phi_hi: float

    @property
    def width(self) -> float:
        return self.phi_hi - self.phi_lo

    def contains(self, phi: float, slack: float = 0.0) -> bool:
        """Whether the direction φ (or its opposite) lies in the cone."""
        offset = np.mod(phi - self.phi_lo + slack, np.pi)
        return bool(offset <= self.width + 2 * slack)
