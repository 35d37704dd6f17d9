from .misc import (
    ElapsedTime,
    TimedResult,
    elapsed_time,
    format_csv_real,
    format_real,
    normalize_angle,
)
from .optimize import bisect_threshold, golden_iterations, golden_section_max, golden_section_min
from .parallel import chunked, default_threads, map_ordered

__all__ = [
    'ElapsedTime',
    'TimedResult',
    'elapsed_time',
    'format_real',
    'format_csv_real',
    'normalize_angle',
    'bisect_threshold',
    'golden_iterations',
    'golden_section_max',
    'golden_section_min',
    'chunked',
    'default_threads',
    'map_ordered',
]
