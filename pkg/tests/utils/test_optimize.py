import numpy as np
from pytest import approx, mark

from banachlib.utils import (
    bisect_threshold,
    golden_iterations,
    golden_section_max,
    golden_section_min,
)


@mark.parametrize(
    'width, tol, expected',
    [(1.0, 2.0, 0), (1.0, 1.0, 0), (1.0, 0.5, 2), (2.0, 1e-13, 64)],
    ids=['Already narrow', 'Equal', 'Two steps', 'Line search'],
)
def test_golden_iterations(width, tol, expected):
    assert golden_iterations(width, tol) == expected


def test_golden_section_min_batch():
    centres = np.array([-1.5, 0.25, 2.0])

    arg, value = golden_section_min(
        lambda z: (z - centres) ** 2 + 1, centres - 3, centres + 5, golden_iterations(8, 1e-10)
    )

    assert arg == approx(centres, abs=1e-6)
    assert value == approx(np.ones(3), abs=1e-12)


def test_golden_section_min_keeps_bracket_end():
    arg, value = golden_section_min(lambda z: z, np.array([0.0]), np.array([1.0]), 5)

    assert arg[0] == 0.0
    assert value[0] == 0.0


def test_golden_section_max():
    arg, value = golden_section_max(
        lambda z: np.sin(z), np.array([0.0]), np.array([np.pi]), golden_iterations(np.pi, 1e-10)
    )

    assert arg[0] == approx(np.pi / 2, abs=1e-6)
    assert value[0] == approx(1.0, abs=1e-12)


def test_bisect_threshold():
    lo, hi = bisect_threshold(lambda z: z**2 - 2, np.array([0.0, 1.0]), np.array([2.0, 3.0]))

    assert np.all(lo**2 < 2)
    assert np.all(hi**2 >= 2)
    assert hi == approx(np.sqrt(2) * np.ones(2), abs=1e-14)
