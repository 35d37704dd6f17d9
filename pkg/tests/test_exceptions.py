from pytest import mark

from banachlib.exceptions import (
    BanachError,
    NormSpecError,
    ParameterError,
    SearchError,
    ZeroVectorError,
    is_retryable,
)


@mark.parametrize(
    'exception, expected',
    [
        (SearchError('coarse grid'), True),
        (ParameterError('t <= 0'), False),
        (NormSpecError('lp:0'), False),
        (ValueError('other'), False),
    ],
)
def test_is_retryable(exception, expected):
    assert is_retryable(exception) is expected


@mark.parametrize('error', [NormSpecError, ZeroVectorError, ParameterError])
def test_input_errors_are_value_errors(error):
    assert issubclass(error, BanachError)
    assert issubclass(error, ValueError)


def test_search_error_is_not_a_value_error():
    assert issubclass(SearchError, BanachError)
    assert not issubclass(SearchError, ValueError)
