from re import fullmatch
from typing import List

from pydantic import ValidationError

from banachlib.exceptions import NormSpecError
from banachlib.normed_plane.models import Vector2
from banachlib.normed_plane.norms import (
    HexagonNorm,
    LinfL1Norm,
    LpNorm,
    NormSpec,
    PolygonNorm,
    TruncatedNorm,
)

REAL = r'[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?'
PAIR = rf'\s*({REAL})\s*,\s*({REAL})\s*'


def parse_vector(text: str) -> Vector2:
    """Parse 'a,b' into a vector."""
    result = fullmatch(PAIR, text)
    if not result:
        raise NormSpecError(f'{text} is not a vector, expected "a,b"')
    return Vector2(x1=float(result.group(1)), x2=float(result.group(2)))


def parse_vectors(text: str) -> List[Vector2]:
    return [parse_vector(chunk) for chunk in text.split(';') if chunk.strip()]


def parse_norm(text: str) -> NormSpec:
    """Parse the norm grammar.

    `lp:<p>` (with `lp:inf`), `linf-l1`, `truncated`, `hexagon:<px>,<py>;<qx>,<qy>` and
    `polygon:<x1>,<y1>;<x2>,<y2>;...`. A polygon given as a half is mirrored through the
    origin.
    """
    cleaned = text.strip().lower()
    family, _, arguments = cleaned.partition(':')
    try:
        if family == 'lp':
            return _parse_lp(arguments)
        if family == 'linf-l1' and not arguments:
            return LinfL1Norm()
        if family == 'truncated' and not arguments:
            return TruncatedNorm()
        if family == 'hexagon':
            vectors = parse_vectors(arguments)
            if len(vectors) != 2:
                raise NormSpecError(f'{text} needs exactly two vectors p;q')
            return HexagonNorm(p=vectors[0], q=vectors[1])
        if family == 'polygon':
            return PolygonNorm(vertices=tuple(_mirrored(parse_vectors(arguments))))
    except ValidationError as e:
        raise NormSpecError(f'{text} is not a valid norm: {e.errors()[0]["msg"]}') from e

    raise NormSpecError(f'{text} is not a norm specification')


def _parse_lp(arguments: str) -> LpNorm:
    if arguments in ('inf', 'infinity'):
        return LpNorm(p=float('inf'))
    if not fullmatch(REAL, arguments):
        raise NormSpecError(f'lp:{arguments} needs a real p or inf')
    return LpNorm(p=float(arguments))


def _mirrored(vertices: List[Vector2]) -> List[Vector2]:
    """Add the reflection through the origin of every vertex whose opposite is missing."""
    result: List[Vector2] = []
    seen = set()
    for v in vertices + [-v for v in vertices]:
        if (v.x1, v.x2) not in seen:
            seen.add((v.x1, v.x2))
            result.append(v)
    return result
