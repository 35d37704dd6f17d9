"""Infimum-type constants: D(X) over isosceles pairs and the modulus of convexity.

For every θ the constraint is solved for φ by bisection and the objective is minimised over
the solutions, then θ is refined around the best grid angle.
"""
from typing import Tuple

import numpy as np

from banachlib.constants import ISOSCELES_SCAN_POINTS, NORM_TOLERANCE
from banachlib.geometric_constants.models import SearchOpts
from banachlib.geometric_constants.objectives import modulus
from banachlib.geometric_constants.search import PairHit, neighbours
from banachlib.normed_plane import NormSpec, angle_grid, unit_points
from banachlib.orthogonality import line_minima
from banachlib.utils import bisect_threshold, golden_section_min


def isosceles_minima(spec: NormSpec, thetas: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Per θ, the least min_λ ||x + λy|| over y with ||x + y|| = ||x - y||.

    Returns the values and the matching y, one row per θ.
    """
    xs = unit_points(spec, thetas)
    offsets = np.linspace(0, np.pi, ISOSCELES_SCAN_POINTS + 1)[1:-1]
    phis = thetas[:, None] + offsets[None, :]
    ys = unit_points(spec, phis)
    xs_ = np.broadcast_to(xs[:, None, :], ys.shape)
    gaps = spec.evaluate(xs_ + ys) - spec.evaluate(xs_ - ys)

    # y runs from near x (gap 2) to near -x (gap -2), so every row changes sign
    rows, cols = np.nonzero((gaps[:, :-1] > 0) & (gaps[:, 1:] <= 0))

    def negative_gap(angles: np.ndarray) -> np.ndarray:
        candidates = unit_points(spec, angles)
        return spec.evaluate(xs[rows] - candidates) - spec.evaluate(xs[rows] + candidates)

    lo, hi = bisect_threshold(negative_gap, phis[rows, cols], phis[rows, cols + 1])
    zero_rows, zero_cols = np.nonzero(np.abs(gaps) <= NORM_TOLERANCE)

    owners = np.concatenate([rows, zero_rows])
    partners = np.concatenate([unit_points(spec, 0.5 * (lo + hi)), ys[zero_rows, zero_cols]])
    _, values = line_minima(spec, xs[owners], partners)

    # Per row, the smallest value and among equal values the first candidate
    order = np.lexsort((np.arange(len(owners)), values, owners))
    _, firsts = np.unique(owners[order], return_index=True)
    picked = order[firsts]
    return values[picked], partners[picked]


def d_inf(spec: NormSpec, opts: SearchOpts) -> PairHit:
    thetas = angle_grid(spec, opts.grid_n)
    values, partners = isosceles_minima(spec, thetas)
    i = int(np.argmin(values))
    best = PairHit(float(values[i]), unit_points(spec, thetas[i : i + 1])[0], partners[i])

    lo, hi = neighbours(thetas, i)
    theta, _ = golden_section_min(
        lambda angles: isosceles_minima(spec, angles)[0],
        np.array([lo]),
        np.array([hi]),
        opts.refine_iters,
    )
    value, partner = isosceles_minima(spec, theta)
    if value[0] < best.value:
        return PairHit(float(value[0]), unit_points(spec, theta)[0], partner[0])
    return best


def chord_minima(
    spec: NormSpec, thetas: np.ndarray, eps: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Per θ, the least 1 - ||x + y||/2 over unit y with ||x - y|| = eps, on both half arcs."""
    xs = unit_points(spec, thetas)
    objective = modulus(spec)

    def short_of_eps(angles: np.ndarray) -> np.ndarray:
        return spec.evaluate(xs - unit_points(spec, angles)) - eps

    values = []
    partners = []
    for direction in (1.0, -1.0):
        # ||x - y|| grows from 0 at y = x to 2 at y = -x along either half arc
        _, hi = bisect_threshold(short_of_eps, thetas, thetas + direction * np.pi)
        ys = unit_points(spec, hi)
        values.append(objective(xs, ys))
        partners.append(ys)

    side = np.argmin(np.stack(values), axis=0)
    rows = np.arange(len(thetas))
    return np.stack(values)[side, rows], np.stack(partners)[side, rows]


def modulus_inf(spec: NormSpec, eps: float, opts: SearchOpts) -> PairHit:
    """Infimum of 1 - ||x + y||/2 over unit x, y at distance eps."""
    thetas = angle_grid(spec, opts.grid_n)
    if eps == 0:
        x = unit_points(spec, thetas[:1])[0]
        return PairHit(0.0, x, x)

    values, partners = chord_minima(spec, thetas, eps)
    i = int(np.argmin(values))
    best = PairHit(float(values[i]), unit_points(spec, thetas[i : i + 1])[0], partners[i])

    lo, hi = neighbours(thetas, i)
    theta, _ = golden_section_min(
        lambda angles: chord_minima(spec, angles, eps)[0],
        np.array([lo]),
        np.array([hi]),
        opts.refine_iters,
    )
    value, partner = chord_minima(spec, theta, eps)
    if value[0] < best.value:
        return PairHit(float(value[0]), unit_points(spec, theta)[0], partner[0])
    return best
