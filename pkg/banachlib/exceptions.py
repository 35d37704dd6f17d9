class BanachError(Exception):
    """Exception to identify any error raised by banachlib."""

    pass


class NormSpecError(BanachError, ValueError):
    """Exception to identify an invalid or unparsable norm specification."""

    pass


class ZeroVectorError(BanachError, ValueError):
    """Exception to identify a zero vector where a direction is required."""

    pass


class ParameterError(BanachError, ValueError):
    """Exception to identify a parameter outside of its admissible range, e.g. t <= 0."""

    pass


class SearchError(BanachError):
    """Exception to identify a numerical search that could not reach its tolerance.

    These can usually be recovered by searching again on a finer grid.
    """

    pass


def is_retryable(exception: BaseException) -> bool:
    """Only numerical search failures are worth another attempt on a finer grid."""
    return isinstance(exception, SearchError)
