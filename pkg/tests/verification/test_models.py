from pytest import mark, param

from banachlib.verification import ClaimStatus, failed
from banachlib.verification.models import (
    agreement_claim,
    lower_claim,
    remark,
    upper_claim,
    within_claim,
)

from ..spaces import L2


@mark.parametrize(
    'value, bound, expected',
    [
        param(1.0, 2.0, ClaimStatus.PASS, id='Below'),
        param(2.0 + 1e-8, 2.0, ClaimStatus.PASS, id='Within tolerance'),
        param(2.1, 2.0, ClaimStatus.FAIL, id='Above'),
    ],
)
def test_upper_claim(value, bound, expected):
    report = upper_claim('claim', L2, value, bound)

    assert report.status is expected
    assert report.slack == bound - value
    assert report.lhs == value and report.rhs == bound


@mark.parametrize(
    'value, bound, expected, passed',
    [
        param(2.0, 1.0, ClaimStatus.PASS, True, id='Above'),
        param(1.0 - 1e-4, 1.0, ClaimStatus.INFO, True, id='Small miss'),
        param(0.5, 1.0, ClaimStatus.FAIL, False, id='Large miss'),
    ],
)
def test_lower_claim(value, bound, expected, passed):
    report = lower_claim('claim', L2, value, bound, {'t': 1.0})

    assert report.status is expected
    assert report.passed is passed
    assert report.params == {'t': 1.0}


def test_within_claim_tolerance():
    assert within_claim('claim', L2, 1.5, 1.0, 1.0).status is ClaimStatus.PASS
    assert within_claim('claim', L2, 2.5, 1.0, 1.0).status is ClaimStatus.FAIL


@mark.parametrize(
    'left, right, expected',
    [
        param(True, True, ClaimStatus.PASS, id='Both'),
        param(False, False, ClaimStatus.PASS, id='Neither'),
        param(True, False, ClaimStatus.FAIL, id='Only left'),
    ],
)
def test_agreement_claim(left, right, expected):
    assert agreement_claim('claim', L2, left, right).status is expected


def test_failed_keeps_only_failures():
    reports = [
        upper_claim('a', L2, 1.0, 2.0),
        upper_claim('b', L2, 3.0, 2.0),
        remark('c', L2, ClaimStatus.NOTE, 'note', lhs=3.0, rhs=2.0),
    ]

    assert [report.claim_id for report in failed(reports)] == ['b']


def test_report_serialises_norm_as_text():
    dumped = upper_claim('claim', L2, 1.0, 2.0).model_dump(mode='json')

    assert dumped['spec'] == 'lp:2'
    assert dumped['status'] == 'PASS'
