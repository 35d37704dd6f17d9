import numpy as np
from pytest import mark

from banachlib.constants import THREADS_ENV_VAR
from banachlib.utils import chunked, default_threads, map_ordered


@mark.parametrize(
    'value, expected',
    [(None, 1), ('3', 3), ('0', 1), ('many', 1)],
    ids=['Unset', 'Set', 'Zero', 'Invalid'],
)
def test_default_threads(value, expected, monkeypatch):
    if value is None:
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    else:
        monkeypatch.setenv(THREADS_ENV_VAR, value)

    assert default_threads() == expected


def test_chunked():
    chunks = chunked(np.arange(10), 4)

    assert [len(chunk) for chunk in chunks] == [4, 4, 2]
    assert np.array_equal(np.concatenate(chunks), np.arange(10))
    assert len(chunked(np.arange(0))) == 1


@mark.parametrize('threads', [1, 2, 8])
def test_map_ordered(threads):
    chunks = chunked(np.arange(1000), 7)

    results = map_ordered(lambda chunk: chunk**2, chunks, threads)

    assert np.array_equal(np.concatenate(results), np.arange(1000) ** 2)
