from pytest import mark, raises

from banachlib.constants import BATTERY_TS
from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import SearchOpts
from banachlib.verification import (
    ClaimStatus,
    builtin_specs,
    failed,
    random_polygons,
    run_battery,
)

from ..spaces import L2, LINF_L1

RADON_CLAIMS = ['radon-a2b', 'radon-atb-upper', 'radon-premise']


def test_builtin_specs():
    texts = [spec.to_text() for spec in builtin_specs()]

    assert texts == ['lp:1', 'lp:2', 'lp:3', 'lp:inf', 'linf-l1', 'truncated', 'hexagon:0,1;1,0']


def test_random_polygons_seeded():
    polygons = random_polygons(5, 3)

    assert polygons == random_polygons(5, 3)
    assert polygons != random_polygons(6, 3)
    for polygon in polygons:
        assert len(polygon.vertices()) in range(6, 17, 2)


def test_battery_order(opts):
    reports = run_battery([L2, LINF_L1], (0.5, 2.0), opts, ('radon',))

    assert [report.spec for report in reports[:6]] == [L2] * 6
    assert [report.claim_id for report in reports[:6]] == RADON_CLAIMS * 2
    assert all(report.spec == LINF_L1 for report in reports[6:])
    assert not failed(reports)


def test_battery_unknown_suite(opts):
    with raises(ParameterError):
        run_battery([L2], (1.0,), opts, ('atb', 'nope'))


def test_dtb_suite_has_no_failures_on_builtin_specs(opts):
    reports = run_battery(builtin_specs(), BATTERY_TS, opts, ('dtb',))

    assert not failed(reports)
    refuted = [report for report in reports if report.claim_id == 'dtb-jb']
    assert any(report.status is ClaimStatus.NOTE for report in refuted)
    assert all(report.witness for report in refuted if report.status is ClaimStatus.NOTE)


@mark.slow
def test_battery_has_no_failures_on_random_polygons():
    specs = builtin_specs() + random_polygons(0, 20)

    assert not failed(run_battery(specs, BATTERY_TS, SearchOpts(grid_n=512)))
