from math import sqrt

import numpy as np
from hypothesis import assume, given
from hypothesis import strategies as st
from pytest import approx, mark, param, raises

from banachlib.exceptions import ParameterError, ZeroVectorError
from banachlib.normed_plane import LpNorm, Vector2
from banachlib.orthogonality import (
    birkhoff_defects,
    is_birkhoff,
    is_isosceles,
    is_roberts,
    is_skew_isosceles,
    min_over_line,
)

from ..spaces import L1, L2, L3, LINF, LINF_L1

coordinates = st.floats(-5, 5)
vectors = st.tuples(coordinates, coordinates)
H = sqrt(2) / 2
C3 = 2 ** (-1 / 3)


def v(a, b) -> Vector2:
    return Vector2(x1=a, x2=b)


def test_min_over_line_euclidean():
    result = min_over_line(L2, v(1, 0), v(0, 1))

    assert result.lambda_star == approx(0, abs=1e-6)
    assert result.value == approx(1, abs=1e-10)
    assert not result.flat


def test_min_over_line_distance_to_line():
    result = min_over_line(L2, v(1, 0), v(H, H))

    assert result.lambda_star == approx(-H, abs=1e-6)
    assert result.value == approx(H, abs=1e-10)


def test_min_over_line_flat_minimum():
    result = min_over_line(LINF_L1, v(1, 0), v(1, 1))

    assert -1 - 1e-9 <= result.lambda_star <= 1e-9
    assert result.value == approx(1, abs=1e-10)
    assert result.flat


@mark.parametrize(
    'spec, x, y, flat',
    [
        param(L2, v(1, 0), v(0, 1), False, id='euclidean'),
        param(L3, v(1, 0), v(0, 2), False, id='l3 quartic-like minimum'),
        param(L1, v(1, 1), v(1, 0), False, id='diamond kink'),
        param(LINF, v(1, 0), v(0, 1), True, id='square side'),
        param(LINF_L1, v(1, 0), v(1, 1), True, id='minimum on the end of a flat piece'),
        param(LINF_L1, v(0, 1), v(1, 1), True, id='mirrored flat piece'),
    ],
)
def test_min_over_line_flat_flag(spec, x, y, flat):
    assert min_over_line(spec, x, y).flat is flat


def test_min_over_line_zero_direction():
    with raises(ZeroVectorError):
        min_over_line(L2, v(1, 0), v(0, 0))


scenarios = [
    param(L2, (1, 0), (0, 1), True, id='Euclidean'),
    param(LINF_L1, (1, 0), (1, 1), True, id='linf-l1 example pair'),
    param(LpNorm(p=3), (C3, C3), (-C3, C3), True, id='l3 symmetric pair'),
    param(LINF, (1, 1), (1, 0), True, id='Square corner'),
    param(LINF, (1, 0), (1, 1), False, id='Square corner reversed'),
    param(L2, (1, 0), (1, 1), False, id='Euclidean oblique'),
]


@mark.parametrize('spec, x, y, expected', scenarios)
def test_is_birkhoff(spec, x, y, expected):
    accepted, defect = is_birkhoff(spec, Vector2.of(x), Vector2.of(y), 1e-9)

    assert accepted is expected
    assert defect >= 0
    if expected:
        assert defect <= 1e-12


def test_is_birkhoff_zero_vector():
    with raises(ZeroVectorError):
        is_birkhoff(L2, v(0, 0), v(0, 1))


@given(vectors, vectors)
def test_birkhoff_defect_against_euclidean_distance(x, y):
    x_, y_ = np.array(x), np.array(y)
    assume(np.linalg.norm(x_) > 0.1 and np.linalg.norm(y_) > 0.1)
    distance = abs(x_[0] * y_[1] - x_[1] * y_[0]) / np.linalg.norm(y_)

    _, defect = is_birkhoff(L2, Vector2.of(x), Vector2.of(y))

    assert defect == approx(np.linalg.norm(x_) - distance, abs=1e-9)


def _breakpoints(spec, x, y):
    """Candidates of the piecewise linear map λ ↦ ||x + λy|| under l1 and l_inf."""
    if spec == L1:
        pairs = [(x[0], y[0]), (x[1], y[1])]
    else:
        pairs = [(x[0] - x[1], y[0] - y[1]), (x[0] + x[1], y[0] + y[1])]
    return np.array([-a / b for a, b in pairs if b != 0])


@given(vectors, vectors, st.sampled_from([L1, LINF]))
def test_birkhoff_defect_against_breakpoints(x, y, spec):
    x_, y_ = np.array(x), np.array(y)
    assume(spec.evaluate(x_) > 0.1 and spec.evaluate(y_) > 0.1)
    lambdas = _breakpoints(spec, x_, y_)
    exact = spec.evaluate(x_) - spec.evaluate(x_ + lambdas[:, None] * y_).min()

    _, defect = is_birkhoff(spec, Vector2.of(x), Vector2.of(y))

    assert defect == approx(max(exact, 0.0), abs=1e-9)


def test_birkhoff_defect_against_dense_grid():
    rng = np.random.default_rng(17)
    for spec in (L3, LINF_L1, LpNorm(p=1.5)):
        xs = rng.normal(size=(20, 2))
        ys = rng.normal(size=(20, 2))
        defects = birkhoff_defects(spec, xs, ys)
        for x, y, defect in zip(xs, ys, defects):
            reach = 2 * spec.evaluate(x) / spec.evaluate(y) + 1
            lambdas = np.linspace(-reach, reach, 100_001)
            oracle = max(spec.evaluate(x) - spec.evaluate(x + lambdas[:, None] * y).min(), 0)
            # The grid minimum is never below the true minimum
            assert oracle <= defect + 1e-10
            assert defect <= oracle + 1e-4 * reach * spec.evaluate(y)


@mark.parametrize('spec', [L3, LINF_L1, LINF], ids=['l3', 'linf-l1', 'linf'])
def test_birkhoff_sign_invariance(spec):
    rng = np.random.default_rng(2)
    xs = rng.normal(size=(50, 2))
    ys = rng.normal(size=(50, 2))
    reference = birkhoff_defects(spec, xs, ys)

    for sx, sy in [(1, -1), (-1, 1), (-1, -1)]:
        assert np.array_equal(birkhoff_defects(spec, sx * xs, sy * ys), reference)


@given(st.floats(0.1, 10), st.floats(0.1, 10), st.booleans(), st.booleans())
def test_birkhoff_homogeneity(alpha, beta, flip_x, flip_y):
    alpha = -alpha if flip_x else alpha
    beta = -beta if flip_y else beta
    for x, y, expected in [((1, 1), (1, 0), True), ((1, 0), (1, 1), False)]:
        scaled_x = Vector2.of(alpha * np.array(x, dtype=float))
        scaled_y = Vector2.of(beta * np.array(y, dtype=float))

        assert is_birkhoff(LINF, scaled_x, scaled_y, 1e-9)[0] is expected


@mark.parametrize(
    'spec, x, y, expected, expected_defect',
    [
        param(L2, (1, 0), (0, 1), True, 0.0, id='Euclidean'),
        param(L1, (1, 0), (0, 1), True, 0.0, id='l1'),
        param(L2, (1, 0), (1, 0), False, 2.0, id='Parallel'),
    ],
)
def test_is_isosceles(spec, x, y, expected, expected_defect):
    accepted, defect = is_isosceles(spec, Vector2.of(x), Vector2.of(y), 1e-9)

    assert accepted is expected
    assert defect == approx(expected_defect, abs=1e-12)


@mark.parametrize(
    'spec, x, y, t',
    [
        param(LINF, (0, 1), (1, 0), 2.0, id='Max norm example'),
        param(L2, (1, 0), (0, 1), 5.0, id='Euclidean'),
        param(L1, (1, 0), (0, 1), 1.0, id='Isosceles at t=1'),
    ],
)
def test_is_skew_isosceles(spec, x, y, t):
    accepted, defect = is_skew_isosceles(spec, Vector2.of(x), Vector2.of(y), t, 1e-9)

    assert accepted
    assert defect == approx(0, abs=1e-12)


@mark.parametrize('t', [0.0, -1.0])
def test_is_skew_isosceles_needs_positive_t(t):
    with raises(ParameterError):
        is_skew_isosceles(L2, v(1, 0), v(0, 1), t)


@mark.parametrize(
    'spec, x, y, grid, expected, expected_defect',
    [
        param(L2, (1, 0), (0, 1), [0.1, 1, 10], True, 0.0, id='Euclidean'),
        param(LINF, (1, 1), (1, 0), [1], False, 1.0, id='Max norm'),
        param(LINF_L1, (1, 0), (0, 1), [0.5, 1, 2], False, 1.0, id='linf-l1'),
    ],
)
def test_is_roberts(spec, x, y, grid, expected, expected_defect):
    accepted, defect = is_roberts(spec, Vector2.of(x), Vector2.of(y), grid, 1e-9)

    assert accepted is expected
    assert defect == approx(expected_defect, abs=1e-12)


def test_is_roberts_needs_grid():
    with raises(ParameterError):
        is_roberts(L2, v(1, 0), v(0, 1), [])
