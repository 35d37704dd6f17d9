"""Inequalities and characterisations relating A_t^B and D_t^B to the classical constants.

Estimates of suprema are lower bounds, so an analytic upper bound they exceed is a genuine
contradiction (FAIL) while an analytic lower bound they miss by less than the slack only
reports INFO.
"""
import logging
from math import sqrt
from typing import Dict, List

import numpy as np

from banachlib.constants import (
    ATTAINMENT_TOLERANCE,
    CONE_ACCEPTANCE_TOLERANCE,
    HEXAGON_EQUALITY_TOLERANCE,
    RADON_TOLERANCE,
    SATURATION_TOLERANCE,
    SKEWNESS_LAMBDAS,
)
from banachlib.geometric_constants import (
    ConstantEstimate,
    ConstantKind,
    KindName,
    SearchOpts,
    estimate,
    known_bounds,
)
from banachlib.normed_plane import NormSpec
from banachlib.orthogonality import radon_defect
from banachlib.verification.models import (
    BoundReport,
    ClaimStatus,
    agreement_claim,
    lower_claim,
    remark,
    upper_claim,
    within_claim,
)


def witness_of(result: ConstantEstimate) -> Dict[str, List[float]]:
    return {'x': result.witness.x.point.as_list(), 'y': result.witness.y.point.as_list()}


def _estimate(name: KindName, spec: NormSpec, opts: SearchOpts, **params) -> ConstantEstimate:
    return estimate(ConstantKind.of(name, **params), spec, opts)


def background_claims(
    name: KindName, spec: NormSpec, opts: SearchOpts, **params
) -> List[BoundReport]:
    """The range every normed plane satisfies, e.g. 1 <= J^B <= 2."""
    kind = ConstantKind.of(name, **params)
    result = estimate(kind, spec, opts)
    bounds = known_bounds(kind)
    claim = f'background-{name.value}'
    witness = witness_of(result)
    if kind.is_infimum:
        # An infimum is overestimated, so only its lower envelope can be contradicted
        return [
            upper_claim(f'{claim}-lower', spec, bounds.lower, result.value, params, witness),
            lower_claim(f'{claim}-upper', spec, bounds.upper, result.value, params, witness),
        ]
    return [
        lower_claim(f'{claim}-lower', spec, result.value, bounds.lower, params, witness),
        upper_claim(f'{claim}-upper', spec, result.value, bounds.upper, params, witness),
    ]


def check_atb_propositions(spec: NormSpec, t: float, opts: SearchOpts) -> List[BoundReport]:
    atb = _estimate(KindName.ATB, spec, opts, t=t)
    jb = _estimate(KindName.JB, spec, opts)
    a2b = _estimate(KindName.A2B, spec, opts)
    skewness = _estimate(KindName.SKEWNESS, spec, opts)
    aprime = _estimate(KindName.APRIME, spec, opts, t=t)
    a2 = _estimate(KindName.A2, spec, opts)
    params = {'t': t}
    witness = witness_of(atb)
    a = atb.value
    short = min(1.0, t)

    reports = [
        lower_claim('atb-range-lower', spec, a, sqrt(2) * short, params, witness),
        upper_claim('atb-range-upper', spec, a, 1 + t, params, witness),
        lower_claim('atb-jb-lower', spec, a, max(1.0, t) * jb.value - abs(1 - t), params, witness),
        upper_claim('atb-jb-upper', spec, a, jb.value / 2 + 1 + abs(1 - t), params, witness),
        lower_claim('atb-a2b-lower', spec, a, short * a2b.value, params, witness),
        upper_claim(
            'atb-a2b-upper', spec, a, 1 + t - (2 - a2b.value) * short, params, witness
        ),
        lower_claim('atb-aprime-a2', spec, aprime.value, short * a2.value, params),
    ]

    saturated = abs(a - (1 + t)) <= SATURATION_TOLERANCE
    not_uniformly_non_square = abs(a2b.value - 2) <= SATURATION_TOLERANCE
    note = 'A_t^B = 1 + t, not uniformly non-square' if saturated else None
    reports.append(
        agreement_claim('atb-nonsquare', spec, saturated, not_uniformly_non_square, params, note)
    )

    reports.extend(_skewness_claims(spec, t, a, skewness.value))

    for name in (KindName.A2B, KindName.JB, KindName.A2, KindName.SKEWNESS):
        reports.extend(background_claims(name, spec, opts))

    logging.info(f'A_t^B propositions on {spec} at t={t}: {len(reports)} reports')
    return sorted(reports, key=lambda report: report.claim_id)


def _skewness_claims(spec: NormSpec, t: float, a: float, s: float) -> List[BoundReport]:
    reports = []
    for lam in SKEWNESS_LAMBDAS:
        bound = 2 * (a + lam - 1 - lam**2 - t) / (lam * (1 + lam))
        report = lower_claim('atb-skewness', spec, s, bound, {'t': t, 'lambda': lam})
        if report.status is ClaimStatus.FAIL:
            # Already contradicted by the Euclidean plane (s = 0) for small t
            note = f'skewness bound exceeds the estimate s = {s}, bound not confirmed'
            report = report.model_copy(update={'status': ClaimStatus.NOTE, 'note': note})
        reports.append(report)
    return reports


def check_dtb_propositions(spec: NormSpec, t: float, opts: SearchOpts) -> List[BoundReport]:
    dtb = _estimate(KindName.DTB, spec, opts, t=t)
    jb = _estimate(KindName.JB, spec, opts)
    delta = _estimate(KindName.MODULUS, spec, opts, eps=1.0)
    params = {'t': t}
    witness = witness_of(dtb)
    d = dtb.value

    reports = [
        lower_claim('dtb-range-lower', spec, d, 0.0, params, witness),
        upper_claim('dtb-range-upper', spec, d, 1 / t, params, witness),
    ]

    if t >= 1:
        reports.append(_james_claim(spec, t, d, jb.value, witness))
    else:
        reports.append(
            remark('dtb-jb', spec, ClaimStatus.NOT_APPLICABLE, 'needs t >= 1', params=params)
        )

    if t <= 1 and delta.value > SATURATION_TOLERANCE:
        bound = (1 - 2 * t * delta.value) / t
        reports.append(upper_claim('dtb-modulus', spec, d, bound, params, witness))
    else:
        reports.append(
            remark(
                'dtb-modulus',
                spec,
                ClaimStatus.NOT_APPLICABLE,
                'needs t <= 1 and δ_X(1) > 0',
                lhs=delta.value,
                params=params,
            )
        )

    reports.append(_sum_claim(spec, t, dtb))
    reports.append(_corollary(spec, t, dtb, jb.value))
    reports.extend(_attainment(spec, t, dtb, delta.value))
    reports.extend(background_claims(KindName.MODULUS, spec, opts, eps=1.0))

    logging.info(f'D_t^B propositions on {spec} at t={t}: {len(reports)} reports')
    return sorted(reports, key=lambda report: report.claim_id)


def _james_claim(
    spec: NormSpec, t: float, d: float, jb: float, witness: Dict[str, List[float]]
) -> BoundReport:
    report = upper_claim('dtb-jb', spec, d, jb - 1, {'t': t}, witness)
    if report.status is ClaimStatus.FAIL:
        # J^B bounds min(||x+y||, ||x-y||), not ||x+y||
        note = f'D_t^B = {d} exceeds J^B - 1 = {jb - 1} at the witness, bound refuted'
        report = report.model_copy(update={'status': ClaimStatus.NOTE, 'note': note})
    return report


def _sum_claim(spec: NormSpec, t: float, dtb: ConstantEstimate) -> BoundReport:
    """D_t^B <= (||x+ty|| - t)/t at the witness, from ||tx - y|| >= t||x|| when x ⊥_B y."""
    x = dtb.witness.x.array
    y = dtb.witness.y.array
    bound = (float(spec.evaluate(x + t * y)) - t) / t
    return within_claim(
        'dtb-sum',
        spec,
        dtb.value,
        bound,
        CONE_ACCEPTANCE_TOLERANCE,
        {'t': t},
        witness_of(dtb),
    )


def _corollary(spec: NormSpec, t: float, dtb: ConstantEstimate, jb: float) -> BoundReport:
    params = {'t': t}
    d = dtb.value
    if t < 1:
        return remark('dtb-corollary', spec, ClaimStatus.NOT_APPLICABLE, 'needs t >= 1')
    if t > 1:
        note = f'D_t^B = 1 is impossible for t > 1 since D_t^B <= 1/t; measured {d}'
        return remark(
            'dtb-corollary', spec, ClaimStatus.NOTE, note, lhs=d, rhs=1 / t, params=params
        )
    report = agreement_claim(
        'dtb-corollary',
        spec,
        abs(d - 1) <= SATURATION_TOLERANCE,
        abs(jb - 2) <= SATURATION_TOLERANCE,
        params,
    )
    if report.status is ClaimStatus.FAIL:
        note = f'D_1^B = {d} while J^B = {jb}, equivalence refuted'
        update = {'status': ClaimStatus.NOTE, 'note': note, 'witness': witness_of(dtb)}
        report = report.model_copy(update=update)
    return report


def _attainment(
    spec: NormSpec, t: float, dtb: ConstantEstimate, delta: float
) -> List[BoundReport]:
    params = {'t': t}
    if abs(dtb.value - 1 / t) > SATURATION_TOLERANCE:
        return [
            remark(
                'dtb-attainment',
                spec,
                ClaimStatus.NOT_APPLICABLE,
                'upper bound 1/t not attained',
                lhs=dtb.value,
                rhs=1 / t,
                params=params,
            )
        ]

    x = dtb.witness.x.array
    y = dtb.witness.y.array
    witness = witness_of(dtb)
    midpoints = spec.evaluate(np.stack([(x + y) / 2, x - y / t]))
    deviation = float(np.abs(midpoints - 1).max())
    length = float(spec.evaluate(x - y))

    return [
        within_claim(
            'dtb-attainment-segment', spec, deviation, 0.0, ATTAINMENT_TOLERANCE, params, witness
        ),
        within_claim(
            'dtb-attainment-length', spec, 1.0, length, ATTAINMENT_TOLERANCE, params, witness
        ),
        within_claim('dtb-attainment-modulus', spec, delta, 0.0, SATURATION_TOLERANCE, params),
        remark(
            'dtb-attainment',
            spec,
            ClaimStatus.NOTE,
            '[x, y] and [x, x - (2/t)y] lie on the unit sphere',
            lhs=dtb.value,
            rhs=1 / t,
            params=params,
            witness=witness,
        ),
    ]


def is_affine_regular_hexagon(spec: NormSpec) -> bool:
    """Six vertices v_0..v_5, counterclockwise, with v_(i+1) = v_i + v_(i+2) for every i."""
    vertices = np.array([v.as_list() for v in spec.vertices()])
    if len(vertices) != 6:
        return False
    scale = np.abs(vertices).max()
    following = np.roll(vertices, -1, axis=0)
    after = np.roll(vertices, -2, axis=0)
    return bool(np.abs(vertices + after - following).max() <= 1e-9 * scale)


def check_radon_results(spec: NormSpec, t: float, opts: SearchOpts) -> List[BoundReport]:
    params = {'t': t}
    defect = radon_defect(spec, opts.grid_n, RADON_TOLERANCE, opts.threads)
    if defect > RADON_TOLERANCE:
        return [
            remark(
                'radon-premise',
                spec,
                ClaimStatus.NOT_APPLICABLE,
                'Birkhoff orthogonality is not symmetric, not a Radon plane',
                lhs=defect,
                rhs=RADON_TOLERANCE,
                params=params,
            )
        ]

    atb = _estimate(KindName.ATB, spec, opts, t=t)
    a2b = _estimate(KindName.A2B, spec, opts)
    witness = witness_of(atb)
    bound = 1 + t - min(1.0, t) / 2
    reports = [
        remark(
            'radon-premise',
            spec,
            ClaimStatus.PASS,
            'Radon plane',
            lhs=defect,
            rhs=RADON_TOLERANCE,
            params=params,
        ),
        upper_claim('radon-atb-upper', spec, atb.value, bound, params, witness),
        upper_claim('radon-a2b', spec, a2b.value, 1.5, witness=witness_of(a2b)),
    ]

    if abs(atb.value - bound) <= HEXAGON_EQUALITY_TOLERANCE:
        if spec.is_polygonal():
            hexagon = is_affine_regular_hexagon(spec)
            reports.append(
                agreement_claim(
                    'radon-hexagon',
                    spec,
                    True,
                    hexagon,
                    params,
                    note='equality forces an affine-regular hexagon',
                )
            )
        else:
            reports.append(
                remark(
                    'radon-hexagon',
                    spec,
                    ClaimStatus.NOTE,
                    'equality attained on a non-polygonal norm, inspect the witness',
                    lhs=atb.value,
                    rhs=bound,
                    params=params,
                    witness=witness,
                )
            )

    return sorted(reports, key=lambda report: report.claim_id)
