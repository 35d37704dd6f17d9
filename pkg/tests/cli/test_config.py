from pydantic import ValidationError
from pytest import approx, mark, param, raises

from banachlib.cli import Command, OrthQuery, OutputFormat, RunConfig, TRange, VerifyOptions
from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import ConstantKind
from banachlib.normed_plane import Vector2
from banachlib.orthogonality import Relation

from ..spaces import HEXAGON, L2

X = Vector2(x1=1, x2=0)
Y = Vector2(x1=0, x2=1)


@mark.parametrize(
    't_range, expected',
    [
        param(TRange(min=0.5, max=2, steps=3), (0.5, 1.25, 2.0), id='Linear'),
        param(TRange(min=1, max=100, steps=3, log=True), (1.0, 10.0, 100.0), id='Log'),
        param(TRange(min=0.3, max=4, steps=1), (0.3,), id='Single'),
    ],
)
def test_t_range_values(t_range, expected):
    assert t_range.values() == approx(expected)


@mark.parametrize(
    'fields',
    [
        param({'min': 2, 'max': 1, 'steps': 3}, id='Empty'),
        param({'min': 0, 'max': 1, 'steps': 3}, id='Zero t'),
        param({'min': 1, 'max': 2, 'steps': 0}, id='No steps'),
    ],
)
def test_invalid_t_range(fields):
    with raises(ValidationError):
        TRange(**fields)


@mark.parametrize(
    'kind, relation, t',
    [
        param('birkhoff', Relation.BIRKHOFF, None, id='Birkhoff'),
        param('Isosceles', Relation.ISOSCELES, None, id='Case insensitive'),
        param('roberts', Relation.ROBERTS, None, id='Roberts'),
        param('skew:0.5', Relation.SKEW_ISOSCELES, 0.5, id='Skew'),
    ],
)
def test_orth_query(kind, relation, t):
    query = OrthQuery.parse(kind, X, Y)

    assert query.relation is relation
    assert query.t == t


@mark.parametrize('kind', ['skew', 'skew:', 'skew:abc', 'birkhoff:2', 'james', ''])
def test_invalid_orth_query(kind):
    with raises(ParameterError):
        OrthQuery.parse(kind, X, Y)


def test_unknown_suite():
    with raises(ValidationError):
        VerifyOptions(suite='everything', samples=10)


def test_run_config_serialises_norm_text():
    config = RunConfig(
        command=Command.CONSTANT, norm=HEXAGON, kind=ConstantKind.of('jb'), format=OutputFormat.CSV
    )
    dumped = config.model_dump(mode='json')

    assert dumped['norm'] == 'hexagon:0,1;1,0'
    assert dumped['format'] == 'csv'
    assert dumped['verify'] is None


@mark.parametrize(
    'fields',
    [
        param({'command': Command.CONSTANT, 'kind': ConstantKind.of('jb')}, id='No norm'),
        param({'command': Command.CONSTANT, 'norm': L2}, id='No kind'),
        param(
            {'command': Command.SWEEP, 'norm': L2, 'kind': ConstantKind.of('atb', t=1)},
            id='No t range',
        ),
        param({'command': Command.VERIFY}, id='No suite options'),
        param({'command': Command.ORTH, 'norm': L2}, id='No query'),
    ],
)
def test_run_config_needs_command_inputs(fields):
    with raises(ValidationError):
        RunConfig(**fields)


def test_verify_needs_no_norm():
    config = RunConfig(command=Command.VERIFY, verify=VerifyOptions(samples=10))

    assert config.norm is None
    assert config.verify.suite == 'all'
