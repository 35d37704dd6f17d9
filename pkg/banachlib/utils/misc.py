from functools import wraps
from math import fmod
from time import perf_counter
from typing import Any, Type

from pydantic import BaseModel

from banachlib.constants import TWO_PI


def normalize_angle(theta: float) -> float:
    """Map any angle into [0, 2π)."""
    angle = fmod(theta, TWO_PI)
    if angle < 0:
        angle += TWO_PI
    # fmod of a tiny negative number can round back up to 2π
    return 0.0 if angle >= TWO_PI else angle


def format_real(value: float) -> str:
    """Shortest text that parses back to the same float, without a trailing '.0'."""
    if value == float('inf'):
        return 'inf'
    text = repr(float(value))
    if text.endswith('.0'):
        text = text[:-2]
    if text == '-0':
        text = '0'
    return text


def format_csv_real(value: float) -> str:
    return f'{value:.17g}'


class ElapsedTime(BaseModel):
    start: float
    end: float

    @property
    def seconds(self) -> float:
        return self.end - self.start

    @property
    def milliseconds(self) -> float:
        return 1000 * (self.end - self.start)


class TimedResult(BaseModel):
    result: Any
    elapsed_time: ElapsedTime


def elapsed_time(data_type: Type[TimedResult]):
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start = perf_counter()
            result = func(*args, **kwargs)
            end = perf_counter()

            return data_type(result=result, elapsed_time=ElapsedTime(start=start, end=end))

        return wrapper

    return decorator
