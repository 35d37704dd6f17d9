"""Objectives of the constants, evaluated on arrays of pairs (x, y) of unit vectors."""
from typing import Callable

import numpy as np

from banachlib.constants import SKEWNESS_STEP
from banachlib.normed_plane import NormSpec

PairObjective = Callable[[np.ndarray, np.ndarray], np.ndarray]


def atb(spec: NormSpec, t: float) -> PairObjective:
    """(||x + ty|| + ||tx - y||) / 2, also A_2(X,B) at t = 1 and A'_t off the mates."""

    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (spec.evaluate(xs + t * ys) + spec.evaluate(t * xs - ys)) / 2

    return objective


def dtb(spec: NormSpec, t: float) -> PairObjective:
    """(||x + ty|| - ||tx - y||) / t, also D'(X) at t = 1."""

    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (spec.evaluate(xs + t * ys) - spec.evaluate(t * xs - ys)) / t

    return objective


def james(spec: NormSpec) -> PairObjective:
    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return np.minimum(spec.evaluate(xs + ys), spec.evaluate(xs - ys))

    return objective


def br(spec: NormSpec, t: float) -> PairObjective:
    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (spec.evaluate(xs + t * ys) - spec.evaluate(xs - t * ys)) / t

    return objective


def cnjb(spec: NormSpec, r: float) -> PairObjective:
    """von Neumann-Jordan quotient of (x, ry) with ||x|| = ||y|| = 1."""

    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        plus = spec.evaluate(xs + r * ys)
        minus = spec.evaluate(xs - r * ys)
        return (plus**2 + minus**2) / (2 * (1 + r**2))

    return objective


def skewness(spec: NormSpec, step: float = SKEWNESS_STEP) -> PairObjective:
    """(||x + λy|| - ||y + λx||) / λ at a small λ, approximating the one-sided limit."""

    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (spec.evaluate(xs + step * ys) - spec.evaluate(ys + step * xs)) / step

    return objective


def f_constant(spec: NormSpec, t: float) -> PairObjective:
    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return (spec.evaluate(xs + t * ys) - spec.evaluate(t * xs + ys)) / 2

    return objective


def modulus(spec: NormSpec) -> PairObjective:
    """1 - ||x + y|| / 2."""

    def objective(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return 1 - spec.evaluate(xs + ys) / 2

    return objective
