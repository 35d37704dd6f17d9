from pytest import approx, mark

from banachlib.verification import (
    ClaimStatus,
    check_atb_propositions,
    check_dtb_propositions,
    check_radon_results,
    failed,
    is_affine_regular_hexagon,
)

from ..spaces import (
    HEXAGON,
    L2,
    L3,
    LINF,
    LINF_L1,
    SKEWED_HEXAGON,
    SQUARE_POLYGON,
    TRUNCATED,
)


def by_id(reports):
    return {report.claim_id: report for report in reports}


@mark.parametrize(
    'spec, t', [(L2, 2.0), (HEXAGON, 0.5), (L3, 1.0)], ids=['l2', 'hexagon', 'l3']
)
def test_atb_propositions_hold(spec, t, opts):
    reports = check_atb_propositions(spec, t, opts)

    assert not failed(reports)
    assert [report.claim_id for report in reports] == sorted(r.claim_id for r in reports)
    claims = by_id(reports)
    assert claims['atb-range-upper'].status is ClaimStatus.PASS
    assert claims['atb-nonsquare'].status is ClaimStatus.PASS


def test_atb_saturation_on_square(opts):
    claims = by_id(check_atb_propositions(LINF, 1.0, opts))

    assert claims['atb-nonsquare'].status is ClaimStatus.PASS
    assert claims['atb-nonsquare'].note is not None


def test_skewness_bound_downgraded_for_euclidean(opts):
    reports = check_atb_propositions(L2, 0.25, opts)
    skewness = [report for report in reports if report.claim_id == 'atb-skewness']

    assert len(skewness) == 5
    assert all(report.status is not ClaimStatus.FAIL for report in skewness)
    assert any(report.status is ClaimStatus.NOTE for report in skewness)


def test_dtb_attainment_on_linf_l1(opts):
    reports = check_dtb_propositions(LINF_L1, 2.0, opts)
    claims = by_id(reports)

    assert not failed(reports)
    assert claims['dtb-attainment'].status is ClaimStatus.NOTE
    for claim in ('dtb-attainment-segment', 'dtb-attainment-length', 'dtb-attainment-modulus'):
        assert claims[claim].status is ClaimStatus.PASS
    assert claims['dtb-jb'].rhs == approx(0.5, abs=1e-3)
    assert claims['dtb-sum'].status is ClaimStatus.PASS
    assert claims['dtb-corollary'].status is ClaimStatus.NOTE


def test_dtb_modulus_bound_on_euclidean(opts):
    claims = by_id(check_dtb_propositions(L2, 0.5, opts))

    assert claims['dtb-modulus'].status is ClaimStatus.PASS
    assert claims['dtb-jb'].status is ClaimStatus.NOT_APPLICABLE
    assert claims['dtb-attainment'].status is ClaimStatus.NOT_APPLICABLE
    assert claims['dtb-corollary'].status is ClaimStatus.NOT_APPLICABLE


def test_dtb_corollary_on_square(opts):
    reports = check_dtb_propositions(LINF, 1.0, opts)
    claims = by_id(reports)

    assert not failed(reports)
    assert claims['dtb-jb'].status is ClaimStatus.PASS
    assert claims['dtb-corollary'].status is ClaimStatus.PASS
    assert claims['dtb-corollary'].lhs == 1.0


def test_dtb_james_bound_refuted_on_linf_l1(opts):
    reports = check_dtb_propositions(LINF_L1, 1.0, opts)
    claims = by_id(reports)

    assert not failed(reports)
    james = claims['dtb-jb']
    assert james.status is ClaimStatus.NOTE
    assert james.lhs == approx(1.0, abs=1e-6)
    assert james.rhs == approx(0.5, abs=1e-3)
    assert 'refuted' in james.note
    assert james.witness is not None
    corollary = claims['dtb-corollary']
    assert corollary.status is ClaimStatus.NOTE
    assert corollary.witness is not None


@mark.parametrize('spec', [L2, L3, LINF_L1, TRUNCATED, SKEWED_HEXAGON], ids=lambda s: str(s))
@mark.parametrize('t', [0.5, 1.0, 2.0])
def test_dtb_sum_bound_holds(spec, t, opts):
    claims = by_id(check_dtb_propositions(spec, t, opts))

    assert claims['dtb-sum'].status is ClaimStatus.PASS
    assert claims['dtb-jb'].status is not ClaimStatus.FAIL
    assert claims['dtb-corollary'].status is not ClaimStatus.FAIL


def test_radon_results_on_euclidean(opts):
    reports = check_radon_results(L2, 1.0, opts)

    assert {report.claim_id for report in reports} == {
        'radon-a2b',
        'radon-atb-upper',
        'radon-premise',
    }
    assert all(report.status is ClaimStatus.PASS for report in reports)


def test_radon_equality_on_hexagon(opts):
    claims = by_id(check_radon_results(HEXAGON, 1.0, opts))

    assert claims['radon-hexagon'].status is ClaimStatus.PASS
    assert claims['radon-atb-upper'].status is ClaimStatus.PASS


def test_radon_not_applicable(opts):
    (report,) = check_radon_results(L3, 1.0, opts)

    assert report.claim_id == 'radon-premise'
    assert report.status is ClaimStatus.NOT_APPLICABLE
    assert report.lhs > report.rhs


@mark.parametrize(
    'spec, expected',
    [
        (LINF_L1, True),
        (HEXAGON, True),
        (SKEWED_HEXAGON, True),
        (TRUNCATED, False),
        (SQUARE_POLYGON, False),
        (L2, False),
    ],
    ids=['linf-l1', 'hexagon', 'skewed hexagon', 'octagon', 'square', 'smooth'],
)
def test_is_affine_regular_hexagon(spec, expected):
    assert is_affine_regular_hexagon(spec) is expected
