"""One runner per command: RunConfig in, exit code out."""
import logging
from typing import Callable, Dict, List

import numpy as np

from banachlib.cli.config import Command, RunConfig
from banachlib.cli.output import (
    EstimateRecord,
    OrthRecord,
    emit,
    estimates_csv,
    orth_csv,
    render,
    reports_csv,
)
from banachlib.constants import BATTERY_TS, ROBERTS_LAMBDA_MAX, ROBERTS_LAMBDA_POINTS
from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import T_KINDS, ConstantKind, estimate
from banachlib.orthogonality import (
    Relation,
    is_birkhoff,
    is_isosceles,
    is_roberts,
    is_skew_isosceles,
)
from banachlib.verification import (
    BoundReport,
    builtin_specs,
    failed,
    random_polygons,
    run_battery,
    run_lemma_suite,
)

EXIT_OK = 0
EXIT_FAILED_CLAIMS = 1
EXIT_USAGE = 2
EXIT_SEARCH = 3

BATTERY_SUITES = ('atb', 'dtb', 'radon')


def cmd_constant(config: RunConfig) -> int:
    record = EstimateRecord.of(estimate(config.kind, config.norm, config.opts))
    logging.info(f'{config.kind.label} of {config.norm}: {record.value}')
    emit(config, render(config, [record], estimates_csv([config.kind.t], [record])))
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    if config.kind.name not in T_KINDS:
        raise ParameterError(f'Only {sorted(k.value for k in T_KINDS)} can be swept over t')
    ts = config.t_range.values()
    records = [
        EstimateRecord.of(
            estimate(ConstantKind.of(config.kind.name, t=t), config.norm, config.opts)
        )
        for t in ts
    ]
    emit(config, render(config, records, estimates_csv(ts, records)))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    options = config.verify
    reports: List[BoundReport] = []
    if options.suite != 'lemmas':
        if config.norm is not None:
            specs = [config.norm]
        else:
            specs = builtin_specs() + random_polygons(config.seed, options.random_polygons)
        suites = BATTERY_SUITES if options.suite == 'all' else (options.suite,)
        reports.extend(run_battery(specs, options.ts or BATTERY_TS, config.opts, suites))
    if options.suite in ('all', 'lemmas'):
        reports.extend(run_lemma_suite(config.seed, options.samples))

    failures = failed(reports)
    for report in failures:
        logging.warning(f'{report.claim_id} failed on {report.spec}: {report.lhs} vs {report.rhs}')
    emit(config, render(config, reports, reports_csv(reports)))
    return EXIT_FAILED_CLAIMS if failures else EXIT_OK


def cmd_orth(config: RunConfig) -> int:
    query = config.orth
    spec = config.norm
    if query.relation is Relation.BIRKHOFF:
        accepted, defect = is_birkhoff(spec, query.x, query.y)
    elif query.relation is Relation.ISOSCELES:
        accepted, defect = is_isosceles(spec, query.x, query.y)
    elif query.relation is Relation.SKEW_ISOSCELES:
        accepted, defect = is_skew_isosceles(spec, query.x, query.y, query.t)
    else:
        lambdas = np.linspace(-ROBERTS_LAMBDA_MAX, ROBERTS_LAMBDA_MAX, ROBERTS_LAMBDA_POINTS)
        accepted, defect = is_roberts(spec, query.x, query.y, lambdas)

    record = OrthRecord(
        relation=query.relation.value,
        t=query.t,
        x=query.x.as_list(),
        y=query.y.as_list(),
        accepted=accepted,
        defect=defect,
    )
    emit(config, render(config, [record], orth_csv(record)))
    return EXIT_OK


def cmd_delta(config: RunConfig) -> int:
    record = EstimateRecord.of(estimate(config.kind, config.norm, config.opts))
    logging.info(f'Modulus of convexity of {config.norm} at {config.kind.eps}: {record.value}')
    emit(config, render(config, [record], estimates_csv([None], [record])))
    return EXIT_OK


RUNNERS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.CONSTANT: cmd_constant,
    Command.SWEEP: cmd_sweep,
    Command.VERIFY: cmd_verify,
    Command.ORTH: cmd_orth,
    Command.DELTA: cmd_delta,
}
