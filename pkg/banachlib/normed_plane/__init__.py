from .models import UnitVector, Vector2
from .norms import (
    AnyNormSpec,
    HexagonNorm,
    LinfL1Norm,
    LpNorm,
    NormSpec,
    PolygonNorm,
    TruncatedNorm,
    norm_eval,
)
from .parsing import parse_norm, parse_vector
from .sphere import (
    angle_grid,
    angle_of,
    directions,
    hexagon_from_linfl1,
    normalize,
    random_polygon,
    unit_point,
    unit_points,
    vertex_angles,
)
from .validation import NormValidationReport, validate_norm

__all__ = [
    'AnyNormSpec',
    'HexagonNorm',
    'LinfL1Norm',
    'LpNorm',
    'NormSpec',
    'NormValidationReport',
    'PolygonNorm',
    'TruncatedNorm',
    'UnitVector',
    'Vector2',
    'angle_grid',
    'angle_of',
    'directions',
    'hexagon_from_linfl1',
    'norm_eval',
    'normalize',
    'parse_norm',
    'parse_vector',
    'random_polygon',
    'unit_point',
    'unit_points',
    'validate_norm',
    'vertex_angles',
]
