from __future__ import annotations

from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import ConstantKind, SearchOpts
from banachlib.normed_plane import AnyNormSpec, NormSpec, Vector2
from banachlib.orthogonality import Relation

SUITE_NAMES = ('all', 'atb', 'dtb', 'radon', 'lemmas')


class Command(Enum):
    CONSTANT = 'constant'
    SWEEP = 'sweep'
    VERIFY = 'verify'
    ORTH = 'orth'
    DELTA = 'delta'


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'


class TRange(BaseModel):
    model_config = ConfigDict(frozen=True)

    min: float = Field(gt=0)
    max: float = Field(gt=0)
    steps: int = Field(ge=1)
    log: bool = False

    @model_validator(mode='after')
    def ordered(self) -> TRange:
        if self.max < self.min:
            raise ValueError(f't range [{self.min}, {self.max}] is empty')
        return self

    def values(self) -> Tuple[float, ...]:
        if self.steps == 1:
            return (self.min,)
        space = np.geomspace if self.log else np.linspace
        return tuple(float(t) for t in space(self.min, self.max, self.steps))


class VerifyOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str = 'all'
    random_polygons: int = Field(0, ge=0)
    samples: int = Field(ge=1)
    ts: Optional[Tuple[float, ...]] = None
    """Explicit t values, the battery values when None."""

    @model_validator(mode='after')
    def known_suite(self) -> VerifyOptions:
        if self.suite not in SUITE_NAMES:
            raise ValueError(f'Unknown suite {self.suite}, expected one of {SUITE_NAMES}')
        return self


class OrthQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation: Relation
    t: Optional[float] = None
    x: Vector2
    y: Vector2

    @classmethod
    def parse(cls, kind: str, x: Vector2, y: Vector2) -> OrthQuery:
        """Parse birkhoff, isosceles, roberts or skew:<t>."""
        name, _, argument = kind.strip().lower().partition(':')
        try:
            if name == 'skew':
                return cls(relation=Relation.SKEW_ISOSCELES, t=float(argument), x=x, y=y)
            if not argument:
                return cls(relation=Relation(name), x=x, y=y)
        except ValueError as e:
            raise ParameterError(f'Invalid orthogonality kind {kind}: {e}') from e
        raise ParameterError(f'Invalid orthogonality kind {kind}')


class RunConfig(BaseModel):
    """Everything one command depends on, echoed in the `config` block of its report."""

    model_config = ConfigDict(frozen=True)

    command: Command
    norm: Optional[AnyNormSpec] = None
    kind: Optional[ConstantKind] = None
    t_range: Optional[TRange] = None
    opts: SearchOpts = SearchOpts()
    seed: int = 0
    out_path: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    verify: Optional[VerifyOptions] = None
    orth: Optional[OrthQuery] = None

    @field_serializer('norm')
    def norm_text(self, norm: Optional[NormSpec]) -> Optional[str]:
        return norm.to_text() if norm is not None else None

    @model_validator(mode='after')
    def command_inputs(self) -> RunConfig:
        if self.command is not Command.VERIFY and self.norm is None:
            raise ValueError(f'{self.command.value} needs a norm')
        if self.command in (Command.CONSTANT, Command.SWEEP, Command.DELTA) and self.kind is None:
            raise ValueError(f'{self.command.value} needs a constant kind')
        if self.command is Command.SWEEP and self.t_range is None:
            raise ValueError('sweep needs a t range')
        if self.command is Command.VERIFY and self.verify is None:
            raise ValueError('verify needs its suite options')
        if self.command is Command.ORTH and self.orth is None:
            raise ValueError('orth needs a relation and two vectors')
        return self
