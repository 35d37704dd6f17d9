from .battery import builtin_specs, random_polygons, run_battery
from .lemmas import run_lemma_suite
from .models import BoundReport, ClaimStatus, failed
from .propositions import (
    check_atb_propositions,
    check_dtb_propositions,
    check_radon_results,
    is_affine_regular_hexagon,
)

__all__ = [
    'BoundReport',
    'ClaimStatus',
    'builtin_specs',
    'check_atb_propositions',
    'check_dtb_propositions',
    'check_radon_results',
    'failed',
    'is_affine_regular_hexagon',
    'random_polygons',
    'run_battery',
    'run_lemma_suite',
]
