import logging
from functools import lru_cache
from math import sqrt
from typing import Dict, Optional, Union

import numpy as np
from pydantic import BaseModel

from banachlib.constants import (
    CNJB_SCALE_MAX,
    CNJB_SCALE_MIN,
    CNJB_SCALE_POINTS,
    SKEWNESS_CHECK_STEP,
    SKEWNESS_STEP,
)
from banachlib.exceptions import ParameterError
from banachlib.geometric_constants import objectives
from banachlib.geometric_constants.infima import d_inf, modulus_inf
from banachlib.geometric_constants.models import (
    BoundSide,
    ConstantEstimate,
    ConstantKind,
    KindName,
    SearchOpts,
    UnitPair,
)
from banachlib.geometric_constants.search import PairHit, mate_sup, parameter_sup, torus_sup
from banachlib.normed_plane import NormSpec, UnitVector, Vector2, angle_of
from banachlib.orthogonality import OrthoPair, Relation, birkhoff_defects

DEFAULT_OPTS = SearchOpts()

CLASSIC_KINDS = frozenset(
    {
        KindName.A2B,
        KindName.JB,
        KindName.J,
        KindName.A2,
        KindName.APRIME,
        KindName.DPRIME,
        KindName.CNJB,
    }
)


class KnownBounds(BaseModel):
    """Range every normed plane satisfies, used as a background check."""

    lower: float
    upper: float


def _unit(point: np.ndarray) -> UnitVector:
    return UnitVector(theta=float(angle_of(point)), point=Vector2.of(point))


def _certificate(
    kind: ConstantKind,
    spec: NormSpec,
    hit: PairHit,
    opts: SearchOpts,
    grid_n: int,
    details: Optional[Dict[str, float]] = None,
) -> ConstantEstimate:
    x, y = _unit(hit.x), _unit(hit.y)
    witness: Union[OrthoPair, UnitPair]
    if kind.is_birkhoff:
        defect = float(birkhoff_defects(spec, hit.x, hit.y)[0])
        if defect > opts.tol:
            logging.warning(
                f'Witness of {kind.label} under {spec} has Birkhoff defect {defect} > {opts.tol}'
            )
        witness = OrthoPair(
            x=x, y=y, relation=Relation.BIRKHOFF, defect=defect, tolerance=opts.tol
        )
    elif kind.name is KindName.D_INF:
        gap = abs(spec.evaluate(hit.x + hit.y) - spec.evaluate(hit.x - hit.y))
        witness = OrthoPair(
            x=x, y=y, relation=Relation.ISOSCELES, defect=float(gap), tolerance=opts.tol
        )
    else:
        witness = UnitPair(x=x, y=y)

    estimate = ConstantEstimate(
        kind=kind,
        norm=spec.to_text(),
        value=hit.value,
        bound_side=BoundSide.UPPER_OF_INF if kind.is_infimum else BoundSide.LOWER_OF_SUP,
        witness=witness,
        grid_n=grid_n,
        refine_iters=opts.refine_iters,
        details=details or {},
    )
    logging.info(f'{kind.label} of {spec}: {estimate.value}')
    return estimate


def estimate_atb(spec: NormSpec, t: float, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """A_t^B: sup of (||x + ty|| + ||tx - y||)/2 over unit x ⊥_B y."""
    kind = ConstantKind.of(KindName.ATB, t=t)
    hit = mate_sup(spec, objectives.atb(spec, t), opts)
    return _certificate(kind, spec, hit, opts, opts.grid_n)


def estimate_dtb(spec: NormSpec, t: float, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """D_t^B: sup of (||x + ty|| - ||tx - y||)/t over unit x ⊥_B y."""
    kind = ConstantKind.of(KindName.DTB, t=t)
    hit = mate_sup(spec, objectives.dtb(spec, t), opts)
    return _certificate(kind, spec, hit, opts, opts.grid_n)


def estimate_classic(
    kind: ConstantKind, spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS
) -> ConstantEstimate:
    """Background constants: A_2(X,B), J^B, J, A_2, A'_t, D' and the Birkhoff C_NJ."""
    name = kind.name
    if name not in CLASSIC_KINDS:
        raise ParameterError(f'{kind.label} is not estimated by estimate_classic')

    if name is KindName.A2B:
        hit = mate_sup(spec, objectives.atb(spec, 1.0), opts)
    elif name is KindName.JB:
        hit = mate_sup(spec, objectives.james(spec), opts)
    elif name is KindName.DPRIME:
        hit = mate_sup(spec, objectives.dtb(spec, 1.0), opts)
    elif name is KindName.CNJB:
        return _estimate_cnjb(kind, spec, opts)
    else:
        if name is KindName.J:
            objective = objectives.james(spec)
        elif name is KindName.A2:
            objective = objectives.atb(spec, 1.0)
        else:
            objective = objectives.atb(spec, kind.t)
        return _certificate(kind, spec, torus_sup(spec, objective, opts), opts, opts.torus_n)
    return _certificate(kind, spec, hit, opts, opts.grid_n)


def _estimate_cnjb(kind: ConstantKind, spec: NormSpec, opts: SearchOpts) -> ConstantEstimate:
    # ⊥_B is homogeneous, so x ⊥_B ry for unit x ⊥_B y and the ratio only depends on r
    scales = np.geomspace(CNJB_SCALE_MIN, CNJB_SCALE_MAX, CNJB_SCALE_POINTS)
    hit, r = parameter_sup(
        lambda r: mate_sup(spec, objectives.cnjb(spec, r), opts), scales, opts.refine_iters
    )
    return _certificate(kind, spec, hit, opts, opts.grid_n, {'r': r})


def estimate_br(spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """BR(X): sup over t > 0 of the sup of (||x + ty|| - ||x - ty||)/t over unit x ⊥_B y."""
    hit, t = parameter_sup(
        lambda t: mate_sup(spec, objectives.br(spec, t), opts), opts.t_grid, opts.refine_iters
    )
    return _certificate(ConstantKind.of(KindName.BR), spec, hit, opts, opts.grid_n, {'t': t})


def estimate_skewness(spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """s(X), with the one-sided limit taken at a small step.

    The quotient is monotone in the step, so the gap to the quotient at a ten times larger
    step is reported as `stability_gap`.
    """
    hit = torus_sup(spec, objectives.skewness(spec, SKEWNESS_STEP), opts)
    check = objectives.skewness(spec, SKEWNESS_CHECK_STEP)(hit.x[None, :], hit.y[None, :])
    details = {'lambda': SKEWNESS_STEP, 'stability_gap': float(abs(check[0] - hit.value))}
    return _certificate(ConstantKind.of(KindName.SKEWNESS), spec, hit, opts, opts.torus_n, details)


def estimate_d_inf(spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """D(X): inf over isosceles orthogonal unit x, y of min_λ ||x + λy||."""
    kind = ConstantKind.of(KindName.D_INF)
    return _certificate(kind, spec, d_inf(spec, opts), opts, opts.grid_n)


def estimate_f(spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS) -> ConstantEstimate:
    """F(X): sup over t > 0 and unit x, y of (||x + ty|| - ||tx + y||)/2."""
    hit, t = parameter_sup(
        lambda t: torus_sup(spec, objectives.f_constant(spec, t), opts),
        opts.t_grid,
        opts.refine_iters,
    )
    return _certificate(ConstantKind.of(KindName.F), spec, hit, opts, opts.torus_n, {'t': t})


def modulus_of_convexity(
    spec: NormSpec, eps: float, opts: SearchOpts = DEFAULT_OPTS
) -> ConstantEstimate:
    """δ_X(eps) over unit pairs at distance exactly eps."""
    kind = ConstantKind.of(KindName.MODULUS, eps=eps)
    hit = modulus_inf(spec, eps, opts)
    return _certificate(kind, spec, hit, opts, opts.grid_n, {'eps': eps})


@lru_cache(maxsize=512)
def estimate(
    kind: ConstantKind, spec: NormSpec, opts: SearchOpts = DEFAULT_OPTS
) -> ConstantEstimate:
    """Estimate any constant, memoised per (kind, spec, opts)."""
    name = kind.name
    if name is KindName.ATB:
        return estimate_atb(spec, kind.t, opts)
    if name is KindName.DTB:
        return estimate_dtb(spec, kind.t, opts)
    if name is KindName.BR:
        return estimate_br(spec, opts)
    if name is KindName.SKEWNESS:
        return estimate_skewness(spec, opts)
    if name is KindName.D_INF:
        return estimate_d_inf(spec, opts)
    if name is KindName.F:
        return estimate_f(spec, opts)
    if name is KindName.MODULUS:
        return modulus_of_convexity(spec, kind.eps, opts)
    return estimate_classic(kind, spec, opts)


def known_bounds(kind: ConstantKind) -> KnownBounds:
    """Range of the constant over all normed planes."""
    name = kind.name
    t = kind.t or 1.0
    if name in (KindName.ATB, KindName.APRIME):
        return KnownBounds(lower=sqrt(2) * min(1.0, t), upper=1 + t)
    if name is KindName.DTB:
        return KnownBounds(lower=0.0, upper=1 / t)
    if name in (KindName.A2B, KindName.A2, KindName.J):
        return KnownBounds(lower=sqrt(2), upper=2.0)
    if name is KindName.JB:
        return KnownBounds(lower=1.0, upper=2.0)
    if name is KindName.CNJB:
        return KnownBounds(lower=1.0, upper=2.0)
    if name in (KindName.DPRIME, KindName.BR, KindName.F):
        return KnownBounds(lower=0.0, upper=1.0)
    if name is KindName.SKEWNESS:
        return KnownBounds(lower=0.0, upper=2.0)
    if name is KindName.D_INF:
        return KnownBounds(lower=2 * (sqrt(2) - 1), upper=1.0)
    eps = kind.eps or 0.0
    return KnownBounds(lower=0.0, upper=1 - sqrt(1 - eps**2 / 4))
