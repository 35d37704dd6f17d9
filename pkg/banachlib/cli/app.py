"""Compute and verify geometric constants of normed planes."""
import logging
import sys
from typing import List, Optional

from argh import ArghParser, arg
from argh.assembling import NameMappingPolicy
from pydantic import ValidationError

from banachlib.cli.commands import EXIT_OK, EXIT_SEARCH, EXIT_USAGE, RUNNERS
from banachlib.cli.config import (
    SUITE_NAMES,
    Command,
    OrthQuery,
    OutputFormat,
    RunConfig,
    TRange,
    VerifyOptions,
)
from banachlib.constants import (
    DEFAULT_CONE_SAMPLES,
    DEFAULT_GRID_N,
    DEFAULT_LEMMA_SAMPLES,
    DEFAULT_REFINE_ITERS,
    DEFAULT_TORUS_N,
)
from banachlib.exceptions import BanachError, ParameterError, SearchError
from banachlib.geometric_constants import ConstantKind, SearchOpts
from banachlib.normed_plane import parse_norm, parse_vector
from banachlib.utils import TimedResult, default_threads, elapsed_time

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')
LOG_FORMAT = '%(levelname)s %(module)s: %(message)s'


class CommandResult(TimedResult):
    result: int


@elapsed_time(CommandResult)
def run(config: RunConfig) -> int:
    return RUNNERS[config.command](config)


def common(func):
    """Options shared by every command: output, logging, threads and search sizes."""
    options = [
        arg('--out', help='write the report to this path instead of stdout'),
        arg('--format', choices=[f.value for f in OutputFormat], help='report format'),
        arg('--log-level', choices=LOG_LEVELS, help='root logger level'),
        arg('--threads', type=int, help='worker threads, BANACH_THREADS when omitted'),
        arg('--grid-n', type=int, help='angles of the unit sphere grid'),
        arg('--refine-iters', type=int, help='golden-section iterations per refinement'),
        arg('--torus-n', type=int, help='angles per axis of unconstrained searches'),
        arg('--cone-samples', type=int, help='samples of every mate cone (odd)'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _opts(grid_n: int, refine_iters: int, torus_n: int, cone_samples: int, threads) -> SearchOpts:
    try:
        return SearchOpts(
            grid_n=grid_n,
            refine_iters=refine_iters,
            torus_n=torus_n,
            cone_samples=cone_samples,
            threads=threads or default_threads(),
        )
    except ValidationError as e:
        raise ParameterError(f'Invalid search options: {e.errors()[0]["msg"]}') from e


def _execute(log_level: str, default_format: OutputFormat, out, format, **fields) -> None:
    logging.basicConfig(level=log_level, format=LOG_FORMAT, force=True)
    try:
        config = RunConfig(
            out_path=out,
            format=OutputFormat(format) if format else default_format,
            **fields,
        )
    except ValidationError as e:
        raise ParameterError(f'Invalid arguments: {e.errors()[0]["msg"]}') from e

    logging.debug(f'Running {config.model_dump_json()}')
    timed = run(config)
    logging.info(f'{config.command.value} took {timed.elapsed_time.milliseconds:.1f} ms')
    if timed.result != EXIT_OK:
        raise SystemExit(timed.result)


def _kind(name: str, t: Optional[float] = None, eps: Optional[float] = None) -> ConstantKind:
    return ConstantKind.of(name, t=t, eps=eps)


@arg('--name', help='constant to estimate, e.g. atb, dtb, jb, br, cnjb, d, modulus')
@arg('--norm', required=True, help='norm, e.g. lp:2, linf-l1, hexagon:0,1;1,0')
@arg('--t', type=float, help='parameter t of atb, dtb and aprime')
@arg('--eps', type=float, help='parameter eps of modulus')
@common
def constant(
    name: str = 'atb',
    norm: str = None,
    t: float = None,
    eps: float = None,
    out: str = None,
    format: str = None,
    log_level: str = 'WARNING',
    threads: int = None,
    grid_n: int = DEFAULT_GRID_N,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    torus_n: int = DEFAULT_TORUS_N,
    cone_samples: int = DEFAULT_CONE_SAMPLES,
) -> None:
    """Estimate one constant with its witness."""
    _execute(
        log_level,
        OutputFormat.JSON,
        out,
        format,
        command=Command.CONSTANT,
        norm=parse_norm(norm),
        kind=_kind(name, t, eps),
        opts=_opts(grid_n, refine_iters, torus_n, cone_samples, threads),
    )


@arg('--name', choices=['atb', 'dtb', 'aprime'], help='constant to sweep')
@arg('--norm', required=True, help='norm, e.g. lp:2, linf-l1, hexagon:0,1;1,0')
@arg('--t-min', type=float, help='first t')
@arg('--t-max', type=float, help='last t')
@arg('--steps', type=int, help='number of t values')
@arg('--log', help='geometric instead of linear spacing')
@common
def sweep(
    name: str = 'atb',
    norm: str = None,
    t_min: float = 0.25,
    t_max: float = 4.0,
    steps: int = 16,
    log: bool = False,
    out: str = None,
    format: str = None,
    log_level: str = 'WARNING',
    threads: int = None,
    grid_n: int = DEFAULT_GRID_N,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    torus_n: int = DEFAULT_TORUS_N,
    cone_samples: int = DEFAULT_CONE_SAMPLES,
) -> None:
    """Estimate a constant over a grid of t, one CSV row per t."""
    try:
        t_range = TRange(min=t_min, max=t_max, steps=steps, log=log)
    except ValidationError as e:
        raise ParameterError(f'Invalid t range: {e.errors()[0]["msg"]}') from e
    _execute(
        log_level,
        OutputFormat.CSV,
        out,
        format,
        command=Command.SWEEP,
        norm=parse_norm(norm),
        kind=_kind(name, t=t_range.min),
        t_range=t_range,
        opts=_opts(grid_n, refine_iters, torus_n, cone_samples, threads),
    )


@arg('--suite', choices=list(SUITE_NAMES), help='which claims to check')
@arg('--norm', help='single norm to check, the built-in battery when omitted')
@arg('--t', type=float, help='single t, the battery values when omitted')
@arg('--random-polygons', type=int, help='random polygons added to the battery')
@arg('--seed', type=int, help='seed of random polygons and lemma samples')
@arg('--samples', type=int, help='samples per lemma family')
@common
def verify(
    suite: str = 'all',
    norm: str = None,
    t: float = None,
    random_polygons: int = 0,
    seed: int = 0,
    samples: int = DEFAULT_LEMMA_SAMPLES,
    out: str = None,
    format: str = None,
    log_level: str = 'WARNING',
    threads: int = None,
    grid_n: int = DEFAULT_GRID_N,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    torus_n: int = DEFAULT_TORUS_N,
    cone_samples: int = DEFAULT_CONE_SAMPLES,
) -> None:
    """Check the inequalities, exit code 1 when any of them fails."""
    try:
        options = VerifyOptions(
            suite=suite,
            random_polygons=random_polygons,
            samples=samples,
            ts=None if t is None else (t,),
        )
    except ValidationError as e:
        raise ParameterError(f'Invalid verify options: {e.errors()[0]["msg"]}') from e
    _execute(
        log_level,
        OutputFormat.JSON,
        out,
        format,
        command=Command.VERIFY,
        norm=parse_norm(norm) if norm else None,
        seed=seed,
        verify=options,
        opts=_opts(grid_n, refine_iters, torus_n, cone_samples, threads),
    )


@arg('--kind', help='birkhoff, isosceles, skew:<t> or roberts')
@arg('--norm', required=True, help='norm, e.g. lp:2, linf-l1, hexagon:0,1;1,0')
@arg('--x', required=True, help='first vector "a,b"')
@arg('--y', required=True, help='second vector "c,d"')
@common
def orth(
    kind: str = 'birkhoff',
    norm: str = None,
    x: str = None,
    y: str = None,
    out: str = None,
    format: str = None,
    log_level: str = 'WARNING',
    threads: int = None,
    grid_n: int = DEFAULT_GRID_N,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    torus_n: int = DEFAULT_TORUS_N,
    cone_samples: int = DEFAULT_CONE_SAMPLES,
) -> None:
    """Test an orthogonality relation between two vectors."""
    _execute(
        log_level,
        OutputFormat.JSON,
        out,
        format,
        command=Command.ORTH,
        norm=parse_norm(norm),
        orth=OrthQuery.parse(kind, parse_vector(x), parse_vector(y)),
        opts=_opts(grid_n, refine_iters, torus_n, cone_samples, threads),
    )


@arg('--norm', required=True, help='norm, e.g. lp:2, linf-l1, hexagon:0,1;1,0')
@arg('--eps', type=float, help='chord length in [0, 2]')
@common
def delta(
    norm: str = None,
    eps: float = 1.0,
    out: str = None,
    format: str = None,
    log_level: str = 'WARNING',
    threads: int = None,
    grid_n: int = DEFAULT_GRID_N,
    refine_iters: int = DEFAULT_REFINE_ITERS,
    torus_n: int = DEFAULT_TORUS_N,
    cone_samples: int = DEFAULT_CONE_SAMPLES,
) -> None:
    """Estimate the modulus of convexity at eps."""
    _execute(
        log_level,
        OutputFormat.JSON,
        out,
        format,
        command=Command.DELTA,
        norm=parse_norm(norm),
        kind=_kind('modulus', eps=eps),
        opts=_opts(grid_n, refine_iters, torus_n, cone_samples, threads),
    )


def parser() -> ArghParser:
    result = ArghParser(prog='banach', description=__doc__)
    result.add_commands(
        [constant, sweep, verify, orth, delta],
        name_mapping_policy=NameMappingPolicy.BY_NAME_IF_HAS_DEFAULT,
    )
    return result


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the `banach` script, returns the exit code.

    0 on success, 1 when a verified claim fails, 2 on usage or parse errors and 3 when a
    numerical search fails.
    """
    try:
        parser().dispatch(argv=argv)
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except SearchError as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_SEARCH
    except BanachError as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_USAGE
    return EXIT_OK
