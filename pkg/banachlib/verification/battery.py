import logging
from typing import Callable, Dict, List, Sequence

import numpy as np

from banachlib.constants import (
    BATTERY_TS,
    RANDOM_POLYGON_MAX_VERTICES,
    RANDOM_POLYGON_MIN_VERTICES,
)
from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import SearchOpts
from banachlib.normed_plane import (
    LinfL1Norm,
    LpNorm,
    NormSpec,
    PolygonNorm,
    TruncatedNorm,
    hexagon_from_linfl1,
    random_polygon,
)
from banachlib.verification.models import BoundReport
from banachlib.verification.propositions import (
    check_atb_propositions,
    check_dtb_propositions,
    check_radon_results,
)

Suite = Callable[[NormSpec, float, SearchOpts], List[BoundReport]]

SUITES: Dict[str, Suite] = {
    'atb': check_atb_propositions,
    'dtb': check_dtb_propositions,
    'radon': check_radon_results,
}


def builtin_specs() -> List[NormSpec]:
    return [
        LpNorm(p=1),
        LpNorm(p=2),
        LpNorm(p=3),
        LpNorm(p=float('inf')),
        LinfL1Norm(),
        TruncatedNorm(),
        hexagon_from_linfl1(),
    ]


def random_polygons(seed: int, count: int) -> List[PolygonNorm]:
    """Seeded random symmetric polygons with an even vertex count between 6 and 16."""
    rng = np.random.default_rng(seed)
    counts = np.arange(RANDOM_POLYGON_MIN_VERTICES, RANDOM_POLYGON_MAX_VERTICES + 1, 2)
    return [random_polygon(rng, int(rng.choice(counts))) for _ in range(count)]


def run_battery(
    specs: Sequence[NormSpec],
    ts: Sequence[float] = BATTERY_TS,
    opts: SearchOpts = SearchOpts(),
    suites: Sequence[str] = ('atb', 'dtb', 'radon'),
) -> List[BoundReport]:
    """Every requested suite on every spec and t, in spec order, then t, then claim id."""
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ParameterError(f'Unknown suites {sorted(unknown)}, expected {sorted(SUITES)}')

    reports: List[BoundReport] = []
    for spec in specs:
        for t in ts:
            batch: List[BoundReport] = []
            for name in suites:
                batch.extend(SUITES[name](spec, t, opts))
            reports.extend(sorted(batch, key=lambda report: report.claim_id))
        logging.info(f'Battery done on {spec}')
    return reports
