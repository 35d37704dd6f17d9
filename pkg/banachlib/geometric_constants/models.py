from __future__ import annotations

from enum import Enum
from typing import Dict, Optional, Tuple, Union

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from banachlib.constants import (
    CONE_ACCEPTANCE_TOLERANCE,
    DEFAULT_CONE_SAMPLES,
    DEFAULT_GRID_N,
    DEFAULT_REFINE_ITERS,
    DEFAULT_T_MAX,
    DEFAULT_T_MIN,
    DEFAULT_T_POINTS,
    DEFAULT_TORUS_N,
    MIN_GRID_N,
)
from banachlib.exceptions import ParameterError
from banachlib.normed_plane import UnitVector
from banachlib.orthogonality import OrthoPair
from banachlib.utils import format_real


class KindName(Enum):
    ATB = 'atb'
    DTB = 'dtb'
    A2B = 'a2b'
    JB = 'jb'
    J = 'j'
    A2 = 'a2'
    APRIME = 'aprime'
    DPRIME = 'dprime'
    D_INF = 'd'
    BR = 'br'
    SKEWNESS = 'skewness'
    CNJB = 'cnjb'
    F = 'f'
    MODULUS = 'modulus'


T_KINDS = frozenset({KindName.ATB, KindName.DTB, KindName.APRIME})

BIRKHOFF_KINDS = frozenset(
    {
        KindName.ATB,
        KindName.DTB,
        KindName.A2B,
        KindName.JB,
        KindName.DPRIME,
        KindName.BR,
        KindName.CNJB,
    }
)

INFIMUM_KINDS = frozenset({KindName.D_INF, KindName.MODULUS})


class BoundSide(Enum):
    LOWER_OF_SUP = 'lower_of_sup'
    UPPER_OF_INF = 'upper_of_inf'


class ConstantKind(BaseModel):
    """Which constant to estimate, with t for ATB, DTB, APRIME and ε for MODULUS."""

    model_config = ConfigDict(frozen=True)

    name: KindName
    t: Optional[float] = None
    eps: Optional[float] = None

    @model_validator(mode='after')
    def parameters_in_range(self) -> ConstantKind:
        if self.name in T_KINDS:
            if self.t is None or not self.t > 0:
                raise ValueError(f'{self.name.value} needs a parameter t > 0, got {self.t}')
        elif self.t is not None:
            raise ValueError(f'{self.name.value} takes no parameter t')
        if self.name is KindName.MODULUS:
            if self.eps is None or not 0 <= self.eps <= 2:
                raise ValueError(f'modulus needs eps in [0, 2], got {self.eps}')
        elif self.eps is not None:
            raise ValueError(f'{self.name.value} takes no parameter eps')
        return self

    @classmethod
    def of(
        cls, name: Union[KindName, str], t: Optional[float] = None, eps: Optional[float] = None
    ) -> ConstantKind:
        """Build a kind, turning range errors into ParameterError."""
        try:
            return cls(name=KindName(name), t=t, eps=eps)
        except (ValidationError, ValueError) as e:
            raise ParameterError(f'Invalid constant {name}: {e}') from e

    @property
    def is_infimum(self) -> bool:
        return self.name in INFIMUM_KINDS

    @property
    def is_birkhoff(self) -> bool:
        return self.name in BIRKHOFF_KINDS

    @property
    def params(self) -> Dict[str, float]:
        params = {}
        if self.t is not None:
            params['t'] = self.t
        if self.eps is not None:
            params['eps'] = self.eps
        return params

    @property
    def label(self) -> str:
        arguments = ','.join(f'{key}={format_real(value)}' for key, value in self.params.items())
        return f'{self.name.value}({arguments})' if arguments else self.name.value


def default_t_grid() -> Tuple[float, ...]:
    return tuple(float(t) for t in np.geomspace(DEFAULT_T_MIN, DEFAULT_T_MAX, DEFAULT_T_POINTS))


class SearchOpts(BaseModel):
    model_config = ConfigDict(frozen=True)

    grid_n: int = Field(DEFAULT_GRID_N, ge=MIN_GRID_N)
    """Number of uniform angles of the θ grid (sphere vertex angles are always added)."""

    refine_iters: int = Field(DEFAULT_REFINE_ITERS, gt=0)
    """Golden-section iterations of every local refinement."""

    t_grid: Tuple[float, ...] = Field(default_factory=default_t_grid, min_length=1)
    """Outer grid of the constants defined as a supremum over t > 0."""

    tol: float = Field(CONE_ACCEPTANCE_TOLERANCE, gt=0)
    """Birkhoff defect accepted for a witness pair."""

    torus_n: int = Field(DEFAULT_TORUS_N, ge=8)
    """Angles per axis of the θ×φ grid of unconstrained constants."""

    cone_samples: int = Field(DEFAULT_CONE_SAMPLES, ge=1)
    """Interior samples of every mate cone, odd so the middle direction is sampled."""

    threads: Optional[int] = Field(None, ge=1, exclude=True)

    @field_validator('t_grid')
    @classmethod
    def positive_t(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if min(value) <= 0:
            raise ValueError('t_grid values must be positive')
        return tuple(sorted(value))

    @field_validator('cone_samples')
    @classmethod
    def odd_samples(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f'cone_samples must be odd, got {value}')
        return value


class UnitPair(BaseModel):
    """Witness of an unconstrained constant: two unit vectors."""

    model_config = ConfigDict(frozen=True)

    x: UnitVector
    y: UnitVector


class ConstantEstimate(BaseModel):
    """A value certified by its witness.

    For a supremum the value is a lower bound attained by the witness, for an infimum an
    upper bound attained by the witness.
    """

    model_config = ConfigDict(frozen=True)

    kind: ConstantKind
    norm: str
    value: float
    bound_side: BoundSide
    witness: Union[OrthoPair, UnitPair]
    grid_n: int
    refine_iters: int
    details: Dict[str, float] = {}
