"""Norm families of the real plane.

Every family evaluates vectorised on arrays of shape (..., 2). Polygonal families also
expose their facet functionals: rows f with ||v|| = max_f f·v, which give the exact
norming functionals (and so the Birkhoff mate cones) at every point of the sphere.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from functools import lru_cache
from math import isinf, sqrt
from typing import Annotated, Any, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from banachlib.constants import HEXAGON_MIN_DETERMINANT, NORM_TOLERANCE
from banachlib.exceptions import NormSpecError
from banachlib.normed_plane.models import Vector2
from banachlib.utils import format_real

ACTIVE_FACET_TOLERANCE = 1e-10

LINF_L1_FACETS = np.array(
    [[1.0, 0.0], [0.0, 1.0], [-1.0, 1.0], [-1.0, 0.0], [0.0, -1.0], [1.0, -1.0]]
)


class NormSpec(ABC, BaseModel):
    """A norm on the real plane, described by its family and parameters."""

    model_config = ConfigDict(frozen=True)

    def __init__(self, **data: Any) -> None:
        try:
            super().__init__(**data)
        except ValidationError as e:
            raise NormSpecError(f'Invalid {type(self).__name__}: {e.errors()[0]["msg"]}') from e

    @abstractmethod
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Norm of every row of an array of shape (..., 2)."""

    @abstractmethod
    def to_text(self) -> str:
        """Text form in the norm grammar, parse_norm(spec.to_text()) == spec."""

    def facet_functionals(self) -> Optional[np.ndarray]:
        """Facet functionals of a polygonal unit ball, None for smooth norms."""
        return None

    def is_polygonal(self) -> bool:
        return self.facet_functionals() is not None

    def vertices(self) -> Tuple[Vector2, ...]:
        """Extreme points of the unit sphere of polygonal norms, counterclockwise."""
        facets = self.facet_functionals()
        if facets is None:
            return ()
        return _vertices_from_facets(facets)

    def norm(self, v: Vector2) -> float:
        return float(self.evaluate(v.array))

    def supporting_functionals(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """The two extreme norming functionals at every (non-zero) point.

        A functional f norms x when f(x) = ||x|| and f has dual norm one. In the plane the
        norming functionals at x form a segment; both ends are returned, counterclockwise,
        and they coincide at smooth points.
        """
        points = np.atleast_2d(points)
        facets = self.facet_functionals()
        if facets is None:
            gradient = self._gradient(points)
            return gradient, gradient
        return _extreme_active_facets(facets, points)

    def _gradient(self, points: np.ndarray) -> np.ndarray:
        raise NotImplementedError(f'{self.to_text()} has no gradient')

    def __str__(self) -> str:
        return self.to_text()


class LpNorm(NormSpec):
    """(|x1|^p + |x2|^p)^(1/p), with p = inf for max(|x1|, |x2|)."""

    family: Literal['lp'] = 'lp'
    p: float

    @field_validator('p')
    @classmethod
    def p_in_range(cls, value: float) -> float:
        if not value >= 1:
            raise ValueError(f'lp norms need p in [1, inf], got {value}')
        return float(value)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        absolute = np.abs(np.asarray(points, dtype=float))
        if isinf(self.p):
            return absolute.max(axis=-1)
        if self.p == 1:
            return absolute.sum(axis=-1)
        # Scale by the largest coordinate so large p does not overflow
        largest = absolute.max(axis=-1)
        safe = np.where(largest > 0, largest, 1.0)
        ratio = absolute / safe[..., None]
        return largest * np.power(np.power(ratio, self.p).sum(axis=-1), 1 / self.p)

    def to_text(self) -> str:
        return f'lp:{format_real(self.p)}'

    def facet_functionals(self) -> Optional[np.ndarray]:
        return _lp_facets(self.p)

    def _gradient(self, points: np.ndarray) -> np.ndarray:
        norms = self.evaluate(points)
        scaled = np.abs(points) / norms[:, None]
        return np.sign(points) * np.power(scaled, self.p - 1)


class LinfL1Norm(NormSpec):
    """The l1 norm where x1*x2 <= 0 and the l_inf norm where x1*x2 >= 0."""

    family: Literal['linf-l1'] = 'linf-l1'

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        x1 = points[..., 0]
        x2 = points[..., 1]
        return np.where(
            np.sign(x1) * np.sign(x2) >= 0,
            np.maximum(np.abs(x1), np.abs(x2)),
            np.abs(x1) + np.abs(x2),
        )

    def to_text(self) -> str:
        return 'linf-l1'

    def facet_functionals(self) -> Optional[np.ndarray]:
        return LINF_L1_FACETS


class TruncatedNorm(NormSpec):
    """max{|x1|, |x2|, (|x1| + |x2|)/sqrt(2)}, a regular octagon."""

    family: Literal['truncated'] = 'truncated'

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        absolute = np.abs(np.asarray(points, dtype=float))
        return np.maximum(absolute.max(axis=-1), absolute.sum(axis=-1) / sqrt(2))

    def to_text(self) -> str:
        return 'truncated'

    def facet_functionals(self) -> Optional[np.ndarray]:
        return _truncated_facets()


class HexagonNorm(NormSpec):
    """Norm whose unit sphere is the hexagon with vertices ±p, ±(p+q), ±q."""

    family: Literal['hexagon'] = 'hexagon'
    p: Vector2
    q: Vector2

    @model_validator(mode='after')
    def not_degenerate(self) -> HexagonNorm:
        if abs(self.p.x1 * self.q.x2 - self.p.x2 * self.q.x1) < HEXAGON_MIN_DETERMINANT:
            raise ValueError(f'Hexagon vectors p={self.p} and q={self.q} are linearly dependent')
        return self

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        # The linear map sending (1,0), (0,1) to q, p carries the linf-l1 sphere onto ours
        local = np.asarray(points, dtype=float) @ _hexagon_inverse(self).T
        return LinfL1Norm().evaluate(local)

    def to_text(self) -> str:
        p, q = self.p, self.q
        return (
            f'hexagon:{format_real(p.x1)},{format_real(p.x2)};'
            f'{format_real(q.x1)},{format_real(q.x2)}'
        )

    def facet_functionals(self) -> Optional[np.ndarray]:
        return LINF_L1_FACETS @ _hexagon_inverse(self)

    def vertices(self) -> Tuple[Vector2, ...]:
        p, q = self.p.array, self.q.array
        return _counterclockwise([p, p + q, q, -p, -(p + q), -q])


class PolygonNorm(NormSpec):
    """Minkowski functional of a centrally symmetric convex polygon around the origin."""

    family: Literal['polygon'] = 'polygon'
    vertices_: Tuple[Vector2, ...] = Field(alias='vertices')

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @field_validator('vertices_')
    @classmethod
    def symmetric_convex(cls, value: Tuple[Vector2, ...]) -> Tuple[Vector2, ...]:
        if len(value) < 4:
            raise ValueError(f'A symmetric polygon needs at least 4 vertices, got {len(value)}')
        ordered = _counterclockwise([v.array for v in value])
        points = np.array([v.as_list() for v in ordered])
        scale = np.abs(points).max()
        for point in points:
            if np.abs(points + point).sum(axis=1).min() > 1e-9 * scale:
                raise ValueError(f'Polygon is not centrally symmetric: -{tuple(point)} missing')
        edges = np.roll(points, -1, axis=0) - points
        following = np.roll(edges, -1, axis=0)
        turns = edges[:, 0] * following[:, 1] - edges[:, 1] * following[:, 0]
        if turns.min() < -1e-12 * scale**2:
            raise ValueError('Polygon vertices do not form a convex polygon')
        offsets = points[:, 0] * edges[:, 1] - points[:, 1] * edges[:, 0]
        if offsets.min() <= 1e-12 * scale**2:
            raise ValueError('The origin is not strictly inside the polygon')
        return ordered

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        facets = self.facet_functionals()
        return (np.asarray(points, dtype=float) @ facets.T).max(axis=-1)

    def to_text(self) -> str:
        pairs = ';'.join(f'{format_real(v.x1)},{format_real(v.x2)}' for v in self.vertices_)
        return f'polygon:{pairs}'

    def facet_functionals(self) -> np.ndarray:
        return _polygon_facets(self)

    def vertices(self) -> Tuple[Vector2, ...]:
        return self.vertices_


AnyNormSpec = Annotated[
    Union[LpNorm, LinfL1Norm, TruncatedNorm, HexagonNorm, PolygonNorm],
    Field(discriminator='family'),
]


def norm_eval(spec: NormSpec, v: Vector2) -> float:
    return spec.norm(v)


@lru_cache(maxsize=None)
def _lp_facets(p: float) -> Optional[np.ndarray]:
    if p == 1:
        return np.array([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])
    if isinf(p):
        return np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    return None


@lru_cache(maxsize=None)
def _truncated_facets() -> np.ndarray:
    s = 1 / sqrt(2)
    return np.array(
        [[1.0, 0.0], [s, s], [0.0, 1.0], [-s, s], [-1.0, 0.0], [-s, -s], [0.0, -1.0], [s, -s]]
    )


@lru_cache(maxsize=None)
def _hexagon_inverse(spec: HexagonNorm) -> np.ndarray:
    return np.linalg.inv(np.column_stack([spec.q.array, spec.p.array]))


@lru_cache(maxsize=None)
def _polygon_facets(spec: PolygonNorm) -> np.ndarray:
    points = np.array([v.as_list() for v in spec.vertices_])
    edges = np.roll(points, -1, axis=0) - points
    normals = np.column_stack([edges[:, 1], -edges[:, 0]])
    offsets = (normals * points).sum(axis=1)
    return normals / offsets[:, None]


def _counterclockwise(points: List[np.ndarray]) -> Tuple[Vector2, ...]:
    array = np.array([np.asarray(p, dtype=float) for p in points])
    angles = np.mod(np.arctan2(array[:, 1], array[:, 0]), 2 * np.pi)
    return tuple(Vector2.of(array[i]) for i in np.argsort(angles, kind='stable'))


def _vertices_from_facets(facets: np.ndarray) -> Tuple[Vector2, ...]:
    angles = np.mod(np.arctan2(facets[:, 1], facets[:, 0]), 2 * np.pi)
    ordered = facets[np.argsort(angles, kind='stable')]
    vertices = []
    for current, following in zip(ordered, np.roll(ordered, -1, axis=0)):
        system = np.array([current, following])
        if abs(np.linalg.det(system)) < NORM_TOLERANCE:
            continue
        vertices.append(np.linalg.solve(system, np.ones(2)))
    return _counterclockwise(vertices)


def _extreme_active_facets(
    facets: np.ndarray, points: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    values = points @ facets.T
    norms = values.max(axis=1)
    active = values >= norms[:, None] * (1 - ACTIVE_FACET_TOLERANCE)
    facet_angles = np.arctan2(facets[:, 1], facets[:, 0])
    point_angles = np.arctan2(points[:, 1], points[:, 0])
    # Angular position of each facet normal relative to the point, in (-pi, pi]
    offsets = np.angle(np.exp(1j * (facet_angles[None, :] - point_angles[:, None])))
    lo = np.where(active, offsets, np.inf).argmin(axis=1)
    hi = np.where(active, offsets, -np.inf).argmax(axis=1)
    return facets[lo], facets[hi]
