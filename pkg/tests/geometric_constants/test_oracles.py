"""Estimators against a dense brute-force search over pairs of sphere angles.

The brute force knows nothing of mate cones: x ⊥_B y is read off the two one-sided steps
||x ± hy|| >= ||x||, which by convexity of λ -> ||x + λy|| decide the global minimum at 0.
"""
from functools import lru_cache
from typing import Callable, Dict

import numpy as np
from pytest import approx, mark, param

from banachlib.geometric_constants import ConstantKind, SearchOpts, estimate
from banachlib.normed_plane import NormSpec

from ..spaces import HEXAGON, L1, L2, LINF_L1

ORACLE_N = 4096
ROWS_PER_CHUNK = 64
STEP = 1e-3
# The exact mates of these norms lie on the angle grid
MATE_SLACK = 1e-12
ORACLE_TOLERANCE = 5e-3
ESTIMATOR_OPTS = SearchOpts(grid_n=512)

Objective = Callable[[NormSpec, np.ndarray, np.ndarray], np.ndarray]

BIRKHOFF_OBJECTIVES: Dict[str, Objective] = {
    'atb(t=0.5)': lambda n, x, y: (n.evaluate(x + 0.5 * y) + n.evaluate(0.5 * x - y)) / 2,
    'atb(t=2)': lambda n, x, y: (n.evaluate(x + 2 * y) + n.evaluate(2 * x - y)) / 2,
    'dtb(t=0.5)': lambda n, x, y: (n.evaluate(x + 0.5 * y) - n.evaluate(0.5 * x - y)) / 0.5,
    'dtb(t=2)': lambda n, x, y: (n.evaluate(x + 2 * y) - n.evaluate(2 * x - y)) / 2,
    'a2b': lambda n, x, y: (n.evaluate(x + y) + n.evaluate(x - y)) / 2,
    'jb': lambda n, x, y: np.minimum(n.evaluate(x + y), n.evaluate(x - y)),
    'dprime': lambda n, x, y: n.evaluate(x + y) - n.evaluate(x - y),
}

FREE_OBJECTIVES: Dict[str, Objective] = {
    'a2': BIRKHOFF_OBJECTIVES['a2b'],
    'j': BIRKHOFF_OBJECTIVES['jb'],
    'aprime(t=2)': BIRKHOFF_OBJECTIVES['atb(t=2)'],
}

KINDS = {
    'atb(t=0.5)': ConstantKind.of('atb', t=0.5),
    'atb(t=2)': ConstantKind.of('atb', t=2.0),
    'dtb(t=0.5)': ConstantKind.of('dtb', t=0.5),
    'dtb(t=2)': ConstantKind.of('dtb', t=2.0),
    'a2b': ConstantKind.of('a2b'),
    'jb': ConstantKind.of('jb'),
    'dprime': ConstantKind.of('dprime'),
    'a2': ConstantKind.of('a2'),
    'j': ConstantKind.of('j'),
    'aprime(t=2)': ConstantKind.of('aprime', t=2.0),
}


@lru_cache(maxsize=None)
def brute_force(spec: NormSpec) -> Dict[str, float]:
    angles = np.linspace(0, 2 * np.pi, ORACLE_N, endpoint=False)
    circle = np.column_stack([np.cos(angles), np.sin(angles)])
    points = circle / spec.evaluate(circle)[:, None]

    best = {label: -np.inf for label in KINDS}
    for start in range(0, ORACLE_N, ROWS_PER_CHUNK):
        rows = points[start : start + ROWS_PER_CHUNK]
        xs = np.broadcast_to(rows[:, None, :], (len(rows), ORACLE_N, 2))
        ys = np.broadcast_to(points[None, :, :], xs.shape)
        floor = spec.evaluate(xs) - MATE_SLACK
        mates = (spec.evaluate(xs + STEP * ys) >= floor) & (
            spec.evaluate(xs - STEP * ys) >= floor
        )
        for label, objective in BIRKHOFF_OBJECTIVES.items():
            values = np.where(mates, objective(spec, xs, ys), -np.inf)
            best[label] = max(best[label], float(values.max()))
        for label, objective in FREE_OBJECTIVES.items():
            best[label] = max(best[label], float(objective(spec, xs, ys).max()))
    return best


@mark.slow
@mark.parametrize('label', list(KINDS))
@mark.parametrize(
    'spec', [param(L2, id='l2'), param(L1, id='l1'), param(LINF_L1, id='linf-l1')]
)
def test_estimator_matches_brute_force(spec, label):
    expected = brute_force(spec)[label]

    assert estimate(KINDS[label], spec, ESTIMATOR_OPTS).value == approx(
        expected, abs=ORACLE_TOLERANCE
    )


@mark.parametrize(
    'kind',
    [
        *KINDS.values(),
        ConstantKind.of('br'),
        ConstantKind.of('skewness'),
        ConstantKind.of('cnjb'),
        ConstantKind.of('d'),
        ConstantKind.of('f'),
        ConstantKind.of('modulus', eps=1.0),
    ],
    ids=lambda kind: kind.label,
)
def test_isometric_copies_agree(kind, opts):
    expected = estimate(kind, LINF_L1, opts).value

    assert estimate(kind, HEXAGON, opts).value == approx(expected, abs=1e-9)
