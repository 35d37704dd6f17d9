from .mates import (
    MateTable,
    birkhoff_mates,
    cone_mates,
    grid_mate_table,
    mate_table,
    perp,
    radon_defect,
    reverse_defects,
    symmetric_pair,
)
from .models import LineMinimum, MateCone, OrthoPair, Relation
from .relations import (
    birkhoff_defects,
    is_birkhoff,
    is_isosceles,
    is_roberts,
    is_skew_isosceles,
    line_minima,
    min_over_line,
)

__all__ = [
    'LineMinimum',
    'MateCone',
    'MateTable',
    'OrthoPair',
    'Relation',
    'birkhoff_defects',
    'birkhoff_mates',
    'cone_mates',
    'grid_mate_table',
    'is_birkhoff',
    'is_isosceles',
    'is_roberts',
    'is_skew_isosceles',
    'line_minima',
    'mate_table',
    'min_over_line',
    'perp',
    'radon_defect',
    'reverse_defects',
    'symmetric_pair',
]
