"""Numerical membership tests for Birkhoff, isosceles, skew isosceles and Roberts orthogonality.

Birkhoff orthogonality reduces to the convex univariate problem min_λ ||x + λy||, solved by
golden-section search on a bracket outside of which ||x + λy|| >= |λ| ||y|| - ||x|| > ||x||.
"""
import logging
from typing import Sequence, Tuple

import numpy as np

from banachlib.constants import (
    LINE_SEARCH_RELATIVE_TOLERANCE,
    NORM_TOLERANCE,
    ORTHOGONALITY_TEST_TOLERANCE,
)
from banachlib.exceptions import ParameterError, ZeroVectorError
from banachlib.normed_plane import NormSpec, Vector2
from banachlib.orthogonality.models import LineMinimum
from banachlib.utils import golden_iterations, golden_section_min

FLAT_OFFSET = 1e-3
"""Flatness test offset, relative to the search bracket."""


def line_minima(
    spec: NormSpec, xs: np.ndarray, ys: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised min_λ ||x + λy|| for rows of xs, ys (ys non-zero). Returns (λ*, value)."""
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    ys = np.atleast_2d(np.asarray(ys, dtype=float))
    reach = 2 * spec.evaluate(xs) / spec.evaluate(ys) + 1

    def along(lambdas: np.ndarray) -> np.ndarray:
        return spec.evaluate(xs + lambdas[:, None] * ys)

    iterations = golden_iterations(2.0, LINE_SEARCH_RELATIVE_TOLERANCE)
    return golden_section_min(along, -reach, reach, iterations)


def birkhoff_defects(spec: NormSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """||x|| - min_λ ||x + λy|| clamped at 0, for every row.

    Rows are put in a sign-canonical form first so the defect of (±x, ±y) is bit-identical.
    """
    xs = _canonical_signs(np.atleast_2d(np.asarray(xs, dtype=float)))
    ys = _canonical_signs(np.atleast_2d(np.asarray(ys, dtype=float)))
    _, values = line_minima(spec, xs, ys)
    return np.maximum(spec.evaluate(xs) - values, 0.0)


def min_over_line(spec: NormSpec, x: Vector2, y: Vector2) -> LineMinimum:
    if y.is_zero():
        raise ZeroVectorError('min_over_line needs a non-zero direction y')
    lambdas, values = line_minima(spec, x.array, y.array)
    lambda_star, value = float(lambdas[0]), float(values[0])
    # Flat when the norm stays at the minimum on either side
    reach = 2 * spec.norm(x) / spec.norm(y) + 1
    nearby = lambda_star + np.array([-FLAT_OFFSET, FLAT_OFFSET]) * reach
    around = spec.evaluate(x.array[None, :] + nearby[:, None] * y.array[None, :])
    flat = bool(np.any(around - value <= NORM_TOLERANCE * max(1.0, value)))
    return LineMinimum(lambda_star=lambda_star, value=value, flat=flat)


def is_birkhoff(
    spec: NormSpec, x: Vector2, y: Vector2, tol: float = ORTHOGONALITY_TEST_TOLERANCE
) -> Tuple[bool, float]:
    """x ⊥_B y when ||x + λy|| >= ||x|| for every real λ. Returns (accepted, defect)."""
    if x.is_zero() or y.is_zero():
        raise ZeroVectorError(f'Birkhoff orthogonality needs non-zero vectors, got {x}, {y}')
    defect = float(birkhoff_defects(spec, x.array, y.array)[0])
    logging.debug(f'Birkhoff defect of {x.as_list()}, {y.as_list()} under {spec}: {defect}')
    return defect <= tol, defect


def is_isosceles(
    spec: NormSpec, x: Vector2, y: Vector2, tol: float = ORTHOGONALITY_TEST_TOLERANCE
) -> Tuple[bool, float]:
    """x ⊥_I y when ||x + y|| = ||x - y||."""
    x_, y_ = x.array, y.array
    defect = float(abs(spec.evaluate(x_ + y_) - spec.evaluate(x_ - y_)))
    return defect <= tol, defect


def is_skew_isosceles(
    spec: NormSpec,
    x: Vector2,
    y: Vector2,
    t: float,
    tol: float = ORTHOGONALITY_TEST_TOLERANCE,
) -> Tuple[bool, float]:
    """Skew isosceles orthogonality with parameter t > 0: ||x + ty|| = ||tx - y||."""
    if not t > 0:
        raise ParameterError(f'Skew isosceles orthogonality needs t > 0, got {t}')
    x_, y_ = x.array, y.array
    defect = float(abs(spec.evaluate(x_ + t * y_) - spec.evaluate(t * x_ - y_)))
    return defect <= tol, defect


def is_roberts(
    spec: NormSpec,
    x: Vector2,
    y: Vector2,
    lambda_grid: Sequence[float],
    tol: float = ORTHOGONALITY_TEST_TOLERANCE,
) -> Tuple[bool, float]:
    """Sampled Roberts test: ||x + λy|| = ||x - λy|| for every λ of the grid.

    Only a necessary condition, a finite grid cannot certify the statement for every λ.
    """
    lambdas = np.asarray(lambda_grid, dtype=float)
    if lambdas.size == 0:
        raise ParameterError('is_roberts needs a non-empty lambda grid')
    steps = lambdas[:, None] * y.array[None, :]
    defects = np.abs(spec.evaluate(x.array + steps) - spec.evaluate(x.array - steps))
    max_defect = float(defects.max())
    return max_defect <= tol, max_defect


def _canonical_signs(points: np.ndarray) -> np.ndarray:
    flip = (points[:, 0] < 0) | ((points[:, 0] == 0) & (points[:, 1] < 0))
    return np.where(flip[:, None], -points, points)
