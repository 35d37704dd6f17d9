from pytest import fixture

from banachlib.geometric_constants import SearchOpts

from .spaces import FAST_OPTS


@fixture()
def opts() -> SearchOpts:
    return FAST_OPTS


@fixture()
def threaded_opts() -> SearchOpts:
    return FAST_OPTS.model_copy(update={'threads': 4})
