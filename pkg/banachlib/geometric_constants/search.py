"""Grid search with local golden-section refinement.

Suprema over Birkhoff pairs scan the mate table of the θ grid, suprema over unconstrained
pairs scan the θ×φ torus. The best grid cell is refined locally and the refined pair is
kept only when it beats the grid, so a finer grid never reports a smaller value. Ties go to
the smallest θ index, then the smallest candidate index.
"""
import logging
from typing import Callable, NamedTuple, Sequence, Tuple

import numpy as np

from banachlib.geometric_constants.models import SearchOpts
from banachlib.geometric_constants.objectives import PairObjective
from banachlib.normed_plane import NormSpec, angle_grid, unit_points
from banachlib.orthogonality import cone_mates, grid_mate_table
from banachlib.orthogonality.mates import cone_fractions
from banachlib.utils import chunked, golden_section_max, map_ordered

TORUS_REFINE_ROUNDS = 2


class PairHit(NamedTuple):
    value: float
    x: np.ndarray
    y: np.ndarray


def neighbours(thetas: np.ndarray, index: int) -> Tuple[float, float]:
    """Grid angles on both sides of thetas[index], unwrapped around 2π."""
    lo = thetas[index - 1] if index > 0 else thetas[-1] - 2 * np.pi
    hi = thetas[index + 1] if index + 1 < len(thetas) else thetas[0] + 2 * np.pi
    return float(lo), float(hi)


def mate_sup(spec: NormSpec, objective: PairObjective, opts: SearchOpts) -> PairHit:
    """Supremum of the objective over pairs x ⊥_B y of unit vectors."""
    table = grid_mate_table(spec, opts.grid_n, opts.cone_samples).signed()

    def chunk_values(chunk: np.ndarray) -> np.ndarray:
        ys = table.ys[chunk]
        xs = np.broadcast_to(table.xs[chunk][:, None, :], ys.shape)
        return np.where(table.valid[chunk], objective(xs, ys), -np.inf)

    rows = np.arange(table.size)
    values = np.concatenate(map_ordered(chunk_values, chunked(rows), opts.threads), axis=0)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best = PairHit(float(values[i, j]), table.xs[i], table.ys[i, j])

    refined = _refine_mates(spec, objective, table.thetas, int(i), opts)
    logging.debug(f'Mate search under {spec}: grid {best.value}, refined {refined.value}')
    return refined if refined.value > best.value else best


def _refine_mates(
    spec: NormSpec, objective: PairObjective, thetas: np.ndarray, index: int, opts: SearchOpts
) -> PairHit:
    fractions = cone_fractions(spec, opts.cone_samples)

    def best_over_cone(angles: np.ndarray) -> np.ndarray:
        xs = unit_points(spec, angles)
        f_lo, f_hi = spec.supporting_functionals(xs)
        ys = cone_mates(spec, f_lo[:, None, :], f_hi[:, None, :], fractions[None, :])
        ys = np.concatenate([ys, -ys], axis=1)
        return objective(np.broadcast_to(xs[:, None, :], ys.shape), ys).max(axis=1)

    lo, hi = neighbours(thetas, index)
    theta, _ = golden_section_max(
        best_over_cone, np.array([lo]), np.array([hi]), opts.refine_iters
    )
    x = unit_points(spec, theta)
    f_lo, f_hi = spec.supporting_functionals(x)

    best = PairHit(-np.inf, x[0], x[0])
    for sign in (1.0, -1.0):

        def along_cone(positions: np.ndarray) -> np.ndarray:
            ys = sign * cone_mates(spec, f_lo, f_hi, positions)
            return objective(np.broadcast_to(x, ys.shape), ys)

        if spec.is_polygonal():
            position, value = golden_section_max(
                along_cone, np.zeros(1), np.ones(1), opts.refine_iters
            )
        else:
            position = np.zeros(1)
            value = along_cone(position)
        if value[0] > best.value:
            y = sign * cone_mates(spec, f_lo, f_hi, position)[0]
            best = PairHit(float(value[0]), x[0], y)
    return best


def torus_sup(spec: NormSpec, objective: PairObjective, opts: SearchOpts) -> PairHit:
    """Supremum of the objective over all pairs of unit vectors."""
    angles = angle_grid(spec, opts.torus_n)
    points = unit_points(spec, angles)

    def chunk_values(chunk: np.ndarray) -> np.ndarray:
        xs = np.broadcast_to(points[chunk][:, None, :], (len(chunk),) + points.shape)
        return objective(xs, np.broadcast_to(points, xs.shape))

    rows = np.arange(len(angles))
    values = np.concatenate(map_ordered(chunk_values, chunked(rows), opts.threads), axis=0)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best = PairHit(float(values[i, j]), points[i], points[j])

    refined = _refine_torus(spec, objective, angles, int(i), int(j), opts)
    logging.debug(f'Torus search under {spec}: grid {best.value}, refined {refined.value}')
    return refined if refined.value > best.value else best


def _refine_torus(
    spec: NormSpec,
    objective: PairObjective,
    angles: np.ndarray,
    i: int,
    j: int,
    opts: SearchOpts,
) -> PairHit:
    theta_bracket = neighbours(angles, i)
    phi_bracket = neighbours(angles, j)
    theta = np.array([angles[i]])
    phi = np.array([angles[j]])

    for _ in range(TORUS_REFINE_ROUNDS):
        y = unit_points(spec, phi)
        theta, _ = golden_section_max(
            lambda a: objective(unit_points(spec, a), np.broadcast_to(y, (len(a), 2))),
            np.array([theta_bracket[0]]),
            np.array([theta_bracket[1]]),
            opts.refine_iters,
        )
        x = unit_points(spec, theta)
        phi, _ = golden_section_max(
            lambda a: objective(np.broadcast_to(x, (len(a), 2)), unit_points(spec, a)),
            np.array([phi_bracket[0]]),
            np.array([phi_bracket[1]]),
            opts.refine_iters,
        )

    x = unit_points(spec, theta)[0]
    y = unit_points(spec, phi)[0]
    return PairHit(float(objective(x[None, :], y[None, :])[0]), x, y)


def parameter_sup(
    search: Callable[[float], PairHit], grid: Sequence[float], iterations: int
) -> Tuple[PairHit, float]:
    """Supremum over a positive parameter: the grid, then golden-section in its logarithm."""
    grid = np.asarray(grid, dtype=float)
    hits = [search(float(t)) for t in grid]
    k = int(np.argmax([hit.value for hit in hits]))
    best, best_t = hits[k], float(grid[k])
    if len(grid) == 1:
        return best, best_t

    logs = np.log(grid)
    lo = logs[max(k - 1, 0)]
    hi = logs[min(k + 1, len(grid) - 1)]
    arg, _ = golden_section_max(
        lambda us: np.array([search(float(np.exp(u))).value for u in us]),
        np.array([lo]),
        np.array([hi]),
        iterations,
    )
    t = float(np.exp(arg[0]))
    refined = search(t)
    if refined.value > best.value:
        return refined, t
    return best, best_t
