from .estimators import (
    KnownBounds,
    estimate,
    estimate_atb,
    estimate_br,
    estimate_classic,
    estimate_d_inf,
    estimate_dtb,
    estimate_f,
    estimate_skewness,
    known_bounds,
    modulus_of_convexity,
)
from .models import (
    T_KINDS,
    BoundSide,
    ConstantEstimate,
    ConstantKind,
    KindName,
    SearchOpts,
    UnitPair,
)

__all__ = [
    'T_KINDS',
    'BoundSide',
    'ConstantEstimate',
    'ConstantKind',
    'KindName',
    'KnownBounds',
    'SearchOpts',
    'UnitPair',
    'estimate',
    'estimate_atb',
    'estimate_br',
    'estimate_classic',
    'estimate_d_inf',
    'estimate_dtb',
    'estimate_f',
    'estimate_skewness',
    'known_bounds',
    'modulus_of_convexity',
]
