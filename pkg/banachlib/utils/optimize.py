"""Vectorised golden-section search and bisection.

Every routine works on numpy arrays of independent problems at once: the same number of
iterations is applied to each bracket so the result of one problem never depends on the
others in the batch.
"""
from math import ceil, log, sqrt
from typing import Callable, Tuple

import numpy as np

from banachlib.constants import BISECTION_DEPTH

INVPHI = (sqrt(5) - 1) / 2  # 1 / phi
INVPHI2 = (3 - sqrt(5)) / 2  # 1 / phi^2

ArrayFunc = Callable[[np.ndarray], np.ndarray]


def golden_iterations(width: float, tol: float) -> int:
    """Number of golden-section steps that shrink a bracket of `width` below `tol`."""
    if width <= tol:
        return 0
    return int(ceil(log(tol / width) / log(INVPHI)))


def golden_section_min(
    func: ArrayFunc, lo: np.ndarray, hi: np.ndarray, iterations: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Minimise a unimodal function on each bracket [lo, hi].

    Returns the best evaluated point of each bracket and its value. The bracket ends are
    evaluated too, so a minimum sitting on an end is never lost.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    h = b - a
    c = a + INVPHI2 * h
    d = a + INVPHI * h
    yc = func(c)
    yd = func(d)

    for _ in range(iterations):
        left = yc <= yd
        # keep [a, d] where the left interior point wins, [c, b] otherwise
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        h = INVPHI * h
        new_c = a + INVPHI2 * h
        new_d = a + INVPHI * h
        trial = np.where(left, new_c, new_d)
        y_trial = func(trial)
        c, yc, d, yd = (
            np.where(left, trial, d),
            np.where(left, y_trial, yd),
            np.where(left, c, trial),
            np.where(left, yc, y_trial),
        )

    candidates = np.stack([c, d, np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)])
    values = np.stack([yc, yd, func(candidates[2]), func(candidates[3])])
    best = np.argmin(values, axis=0)
    columns = np.arange(candidates.shape[1])
    return candidates[best, columns], values[best, columns]


def golden_section_max(
    func: ArrayFunc, lo: np.ndarray, hi: np.ndarray, iterations: int
) -> Tuple[np.ndarray, np.ndarray]:
    arg, value = golden_section_min(lambda z: -func(z), lo, hi, iterations)
    return arg, -value


def bisect_threshold(
    func: ArrayFunc,
    lo: np.ndarray,
    hi: np.ndarray,
    iterations: int = BISECTION_DEPTH,
) -> Tuple[np.ndarray, np.ndarray]:
    """Shrink brackets whose ends satisfy func(lo) < 0 <= func(hi).

    Returns the final (lo, hi) pairs; lo keeps the negative side and hi the other.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    for _ in range(iterations):
        mid = 0.5 * (a + b)
        negative = func(mid) < 0
        a = np.where(negative, mid, a)
        b = np.where(negative, b, mid)
    return a, b
