import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np

from banachlib.constants import THREADS_ENV_VAR

T = TypeVar('T')

CHUNK_SIZE = 256


def default_threads() -> int:
    """Worker count from the environment, one worker when unset or invalid."""
    try:
        return max(1, int(os.environ.get(THREADS_ENV_VAR, '1')))
    except ValueError:
        return 1


def chunked(values: np.ndarray, size: int = CHUNK_SIZE) -> List[np.ndarray]:
    return [values[i : i + size] for i in range(0, len(values), size)] or [values[:0]]


def map_ordered(
    func: Callable[[np.ndarray], T], chunks: Sequence[np.ndarray], threads: Optional[int] = None
) -> List[T]:
    """Apply func to every chunk, results in chunk order whatever the worker count."""
    workers = threads or default_threads()
    if workers <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=min(workers, len(chunks))) as pool:
        return list(pool.map(func, chunks))
