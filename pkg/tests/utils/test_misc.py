from math import pi

from pytest import approx, mark

from banachlib.utils import (
    ElapsedTime,
    TimedResult,
    elapsed_time,
    format_csv_real,
    format_real,
    normalize_angle,
)


@mark.parametrize(
    'theta, expected',
    [(0.0, 0.0), (-pi / 2, 3 * pi / 2), (5 * pi, pi), (-1e-300, 0.0)],
    ids=['Zero', 'Negative', 'Several turns', 'Tiny negative'],
)
def test_normalize_angle(theta, expected):
    angle = normalize_angle(theta)

    assert 0 <= angle < 2 * pi
    assert angle == approx(expected)


@mark.parametrize(
    'value, expected',
    [(2.0, '2'), (0.1, '0.1'), (float('inf'), 'inf'), (-0.0, '0'), (1e-20, '1e-20')],
    ids=['Integer', 'Decimal', 'Infinity', 'Negative zero', 'Exponent'],
)
def test_format_real(value, expected):
    assert format_real(value) == expected
    if value != float('inf'):
        assert float(format_real(value)) == value


def test_format_csv_real():
    assert format_csv_real(0.1) == '0.10000000000000001'
    assert float(format_csv_real(1 / 3)) == 1 / 3


def test_elapsed_time():
    @elapsed_time(TimedResult)
    def answer(value: int) -> int:
        return 2 * value

    timed = answer(21)

    assert timed.result == 42
    assert isinstance(timed.elapsed_time, ElapsedTime)
    assert timed.elapsed_time.seconds >= 0
    assert timed.elapsed_time.milliseconds == approx(1000 * timed.elapsed_time.seconds)
