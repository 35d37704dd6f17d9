"""Birkhoff mates: the directions orthogonal to a point of the unit sphere.

In the plane the mates of a unit vector x are the directions annihilated by some norming
functional of x. The norming functionals form a segment [f_lo, f_hi], so the mates form a
cone between perp(f_lo) and perp(f_hi), which collapses to a single direction where the
sphere is smooth.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict
from tenacity import Retrying
from tenacity.retry import retry_if_exception
from tenacity.stop import stop_after_attempt

from banachlib.constants import (
    BISECTION_DEPTH,
    CONE_ACCEPTANCE_TOLERANCE,
    DEFAULT_CONE_SAMPLES,
    MIN_GRID_N,
    MIN_MATE_GRID_N,
    NORM_TOLERANCE,
    SYMMETRIC_PAIR_ATTEMPTS,
)
from banachlib.exceptions import ParameterError, SearchError, is_retryable
from banachlib.normed_plane import (
    NormSpec,
    UnitVector,
    Vector2,
    angle_grid,
    angle_of,
    normalize,
    unit_point,
    unit_points,
)
from banachlib.orthogonality.models import MateCone, OrthoPair, Relation
from banachlib.orthogonality.relations import birkhoff_defects
from banachlib.utils import (
    bisect_threshold,
    chunked,
    golden_iterations,
    golden_section_min,
    map_ordered,
)


def perp(functionals: np.ndarray) -> np.ndarray:
    """Rotate by +π/2: the direction annihilated by each functional."""
    return np.stack([-functionals[..., 1], functionals[..., 0]], axis=-1)


def cone_mates(
    spec: NormSpec, f_lo: np.ndarray, f_hi: np.ndarray, fractions: np.ndarray
) -> np.ndarray:
    """Unit mates at position s in [0, 1] of each cone, s=0 at perp(f_lo) and s=1 at perp(f_hi)."""
    fractions = np.asarray(fractions, dtype=float)[..., None]
    return normalize(spec, perp((1 - fractions) * f_lo + fractions * f_hi))


class MateTable(BaseModel):
    """Candidate Birkhoff mates for every angle of a grid.

    Row i holds x(θ_i) and the unit vectors y with x ⊥_B y taken from its cone: both ends,
    interior samples and the sphere vertices inside the cone. `valid` masks the vertex
    columns that do not apply to a row.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    thetas: np.ndarray
    xs: np.ndarray
    f_lo: np.ndarray
    f_hi: np.ndarray
    ys: np.ndarray
    valid: np.ndarray

    @property
    def size(self) -> int:
        return len(self.thetas)

    def signed(self) -> MateTable:
        """The same table with every candidate y followed by -y."""
        return self.model_copy(
            update={
                'ys': np.concatenate([self.ys, -self.ys], axis=1),
                'valid': np.concatenate([self.valid, self.valid], axis=1),
            }
        )


def cone_fractions(spec: NormSpec, cone_samples: int) -> np.ndarray:
    """Cone ends followed by cone_samples evenly spaced interior positions."""
    if not spec.is_polygonal():
        return np.zeros(1)
    interior = np.arange(1, cone_samples + 1) / (cone_samples + 1)
    return np.concatenate([[0.0, 1.0], interior])


def mate_table(
    spec: NormSpec, thetas: np.ndarray, cone_samples: int = DEFAULT_CONE_SAMPLES
) -> MateTable:
    thetas = np.asarray(thetas, dtype=float)
    xs = unit_points(spec, thetas)
    f_lo, f_hi = spec.supporting_functionals(xs)
    fractions = cone_fractions(spec, cone_samples)
    ys = cone_mates(spec, f_lo[:, None, :], f_hi[:, None, :], fractions[None, :])
    valid = np.ones(ys.shape[:2], dtype=bool)

    vertices = np.array([v.as_list() for v in spec.vertices()]).reshape(-1, 2)
    if len(vertices):
        # v is a mate iff the segment of norming functionals crosses the line f·v = 0
        low = f_lo @ vertices.T
        high = f_hi @ vertices.T
        inside = low * high <= NORM_TOLERANCE
        ys = np.concatenate([ys, np.broadcast_to(vertices, (len(thetas),) + vertices.shape)], 1)
        valid = np.concatenate([valid, inside], axis=1)

    return MateTable(thetas=thetas, xs=xs, f_lo=f_lo, f_hi=f_hi, ys=ys, valid=valid)


@lru_cache(maxsize=64)
def grid_mate_table(
    spec: NormSpec, grid_n: int, cone_samples: int = DEFAULT_CONE_SAMPLES
) -> MateTable:
    """Mate table on the uniform θ grid merged with the vertex angles, shared by estimators."""
    logging.debug(f'Building mate table for {spec} on {grid_n} angles')
    return mate_table(spec, angle_grid(spec, grid_n), cone_samples)


def reverse_defects(spec: NormSpec, table: MateTable, threads: Optional[int] = None) -> np.ndarray:
    """Birkhoff defect of (y, x) for every candidate of the table, +inf where not valid."""
    rows = np.arange(table.size)

    def chunk_defects(chunk: np.ndarray) -> np.ndarray:
        ys = table.ys[chunk]
        xs = np.broadcast_to(table.xs[chunk][:, None, :], ys.shape)
        defects = birkhoff_defects(spec, ys.reshape(-1, 2), xs.reshape(-1, 2))
        return defects.reshape(ys.shape[:2])

    defects = np.concatenate(map_ordered(chunk_defects, chunked(rows, 64), threads), axis=0)
    return np.where(table.valid, defects, np.inf)


def birkhoff_mates(
    spec: NormSpec, theta: float, grid_n: int, tol: float = CONE_ACCEPTANCE_TOLERANCE
) -> List[MateCone]:
    """Scan the directions φ in [0, π) and group the accepted ones into maximal cones.

    Cone ends are refined by bisection on the defect. When no grid direction is accepted
    (smooth spheres) the local minima of the defect are refined by golden-section search
    instead and reported as degenerate cones.
    """
    if grid_n < MIN_MATE_GRID_N:
        raise ParameterError(f'birkhoff_mates needs grid_n >= {MIN_MATE_GRID_N}, got {grid_n}')

    x = unit_point(spec, theta)
    step = np.pi / grid_n
    phis = np.arange(grid_n) * step

    def defect_at(angles: np.ndarray) -> np.ndarray:
        ys = unit_points(spec, angles)
        return birkhoff_defects(spec, np.broadcast_to(x.array, ys.shape), ys)

    accepted = defect_at(phis) <= tol
    if accepted.all():
        raise SearchError(f'Every direction is a Birkhoff mate of {x.point} under {spec}')

    if accepted.any():
        cones = _accepted_runs(accepted, phis, step, lambda a: defect_at(a) - tol)
    else:
        cones = _refined_minima(defect_at, phis, step, tol)
    if not cones:
        raise SearchError(
            f'No Birkhoff mate of {x.point} under {spec} on {grid_n} directions at tol {tol}'
        )
    logging.debug(f'{len(cones)} mate cones at θ={theta} under {spec}')
    return [MateCone(x=x, phi_lo=lo, phi_hi=hi) for lo, hi in cones]


def _accepted_runs(accepted, phis, step, excess) -> List[tuple]:
    n = len(phis)
    # Start right after a rejected direction so no run is split by the wrap around
    start = int(np.argmin(accepted)) + 1
    order = (start + np.arange(n)) % n
    unwrapped = phis[order] + np.where(order < start, np.pi, 0.0)
    flags = accepted[order]

    runs = []
    i = 0
    while i < n:
        if not flags[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and flags[j + 1]:
            j += 1
        runs.append((i, j))
        i = j + 1

    firsts = np.array([unwrapped[i] for i, _ in runs])
    lasts = np.array([unwrapped[j] for _, j in runs])
    lo, _ = bisect_threshold(excess, firsts, firsts - step, BISECTION_DEPTH)
    hi, _ = bisect_threshold(excess, lasts, lasts + step, BISECTION_DEPTH)
    return [(float(a), float(b)) for a, b in zip(_wrapped(lo), _wrapped(lo) + (hi - lo))]


def _refined_minima(defect_at, phis, step, tol) -> List[tuple]:
    values = defect_at(phis)
    minima = np.flatnonzero((values <= np.roll(values, 1)) & (values <= np.roll(values, -1)))
    if not len(minima):
        return []
    centres = phis[minima]
    iterations = golden_iterations(2 * step, 1e-15)
    arg, value = golden_section_min(defect_at, centres - step, centres + step, iterations)
    return [(phi, phi) for phi in _wrapped(arg[value <= tol]).tolist()]


def _wrapped(angles: np.ndarray) -> np.ndarray:
    return np.mod(angles, np.pi)


def _symmetric_pair_on_grid(spec: NormSpec, grid_n: int, tol: float) -> OrthoPair:
    table = grid_mate_table(spec, grid_n)
    reverse = reverse_defects(spec, table).min(axis=1)
    best = int(np.argmin(reverse))
    theta = float(table.thetas[best])

    if reverse[best] > tol:
        # Refine θ between the neighbouring grid angles
        step = np.diff(table.thetas).max()

        def best_reverse(angles: np.ndarray) -> np.ndarray:
            return reverse_defects(spec, mate_table(spec, angles)).min(axis=1)

        iterations = golden_iterations(2 * step, 1e-15)
        arg, _ = golden_section_min(
            best_reverse, np.array([theta - step]), np.array([theta + step]), iterations
        )
        theta = float(arg[0])

    row = mate_table(spec, np.array([theta]))
    backward = reverse_defects(spec, row)[0]
    column = int(np.argmin(backward))
    x = row.xs[0]
    y = row.ys[0, column]
    forward = float(birkhoff_defects(spec, x, y)[0])
    defect = max(forward, float(backward[column]))
    if defect > tol:
        raise SearchError(
            f'No symmetric Birkhoff pair under {spec} on {grid_n} angles, best defect {defect}'
        )

    return OrthoPair(
        x=UnitVector(theta=float(angle_of(x)), point=Vector2.of(x)),
        y=UnitVector(theta=float(angle_of(y)), point=Vector2.of(y)),
        relation=Relation.BIRKHOFF,
        defect=defect,
        tolerance=tol,
    )


def symmetric_pair(
    spec: NormSpec, grid_n: int, tol: float = CONE_ACCEPTANCE_TOLERANCE
) -> OrthoPair:
    """A pair with x ⊥_B y and -y ⊥_B x, which exists in every normed plane.

    Retried with a doubled grid before giving up with a SearchError.
    """
    if grid_n < MIN_GRID_N:
        raise ParameterError(f'symmetric_pair needs grid_n >= {MIN_GRID_N}, got {grid_n}')

    for attempt in Retrying(
        reraise=True,
        stop=stop_after_attempt(SYMMETRIC_PAIR_ATTEMPTS),
        retry=retry_if_exception(is_retryable),
    ):
        with attempt:
            size = grid_n * 2 ** (attempt.retry_state.attempt_number - 1)
            if attempt.retry_state.attempt_number > 1:
                logging.info(f'Retrying the symmetric pair search under {spec} on {size} angles')
            return _symmetric_pair_on_grid(spec, size, tol)
    raise SearchError(f'No symmetric Birkhoff pair under {spec}')  # pragma: no cover


@lru_cache(maxsize=128)
def radon_defect(
    spec: NormSpec,
    grid_n: int,
    tol: float = CONE_ACCEPTANCE_TOLERANCE,
    threads: Optional[int] = None,
) -> float:
    """Largest reverse defect over the mate pairs of the grid, at most tol on Radon planes."""
    if grid_n < MIN_GRID_N:
        raise ParameterError(f'radon_defect needs grid_n >= {MIN_GRID_N}, got {grid_n}')
    reverse = reverse_defects(spec, grid_mate_table(spec, grid_n), threads)
    defect = float(np.max(np.where(np.isfinite(reverse), reverse, 0.0)))
    logging.info(f'Radon defect of {spec} on {grid_n} angles: {defect} (Radon: {defect <= tol})')
    return defect
