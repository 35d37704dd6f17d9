"""Randomised checks of the norm inequalities every estimate relies on.

Each family samples random norms (lp with p in [1, 8] and random symmetric polygons) and
random vectors, and reports its largest violation with the sample that produced it.
"""
import logging
from typing import Callable, List, Tuple

import numpy as np

from banachlib.constants import (
    LEMMA_MAX_P,
    LEMMA_TOLERANCE,
    RANDOM_POLYGON_MAX_VERTICES,
    RANDOM_POLYGON_MIN_VERTICES,
)
from banachlib.exceptions import ParameterError
from banachlib.normed_plane import LpNorm, NormSpec, normalize, random_polygon
from banachlib.verification.models import BoundReport, ClaimStatus

POOL_SIZE = 8

# (violations, witness columns) for a batch of samples under one norm
Family = Callable[[NormSpec, np.random.Generator, int], Tuple[np.ndarray, dict]]


def random_norms(rng: np.random.Generator, count: int) -> List[NormSpec]:
    """Alternating lp norms with random p and random symmetric polygons."""
    norms: List[NormSpec] = []
    for i in range(count):
        if i % 2 == 0:
            norms.append(LpNorm(p=float(rng.uniform(1.0, LEMMA_MAX_P))))
        else:
            counts = np.arange(RANDOM_POLYGON_MIN_VERTICES, RANDOM_POLYGON_MAX_VERTICES + 1, 2)
            norms.append(random_polygon(rng, int(rng.choice(counts))))
    return norms


def _vectors(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.normal(size=(size, 2))


def convexity(spec: NormSpec, rng: np.random.Generator, size: int) -> Tuple[np.ndarray, dict]:
    """Midpoint convexity of t ↦ ||x + ty|| + ||tx - y|| and t ↦ ||tx + y|| + ||x - ty||."""
    x = normalize(spec, _vectors(rng, size))
    y = normalize(spec, _vectors(rng, size))
    t1 = rng.uniform(-5, 5, size=size)[:, None]
    t2 = rng.uniform(-5, 5, size=size)[:, None]
    mid = (t1 + t2) / 2

    def f(t: np.ndarray) -> np.ndarray:
        return spec.evaluate(x + t * y) + spec.evaluate(t * x - y)

    def g(t: np.ndarray) -> np.ndarray:
        return spec.evaluate(t * x + y) + spec.evaluate(x - t * y)

    violations = np.maximum(
        f(mid) - (f(t1) + f(t2)) / 2,
        g(mid) - (g(t1) + g(t2)) / 2,
    )
    return violations, {'x': x, 'y': y, 't1': t1[:, 0], 't2': t2[:, 0]}


def monotone_quotient(
    spec: NormSpec, rng: np.random.Generator, size: int
) -> Tuple[np.ndarray, dict]:
    """λ ↦ (||x + λy|| - ||x||)/λ is non-decreasing on both sides of 0."""
    x = _vectors(rng, size)
    y = _vectors(rng, size)
    magnitudes = np.sort(np.exp(rng.uniform(np.log(1e-3), np.log(10.0), size=(size, 2))), axis=1)
    # Either both positive or both negative, with lam1 < lam2
    negative = rng.random(size) < 0.5
    lam1 = np.where(negative, -magnitudes[:, 1], magnitudes[:, 0])[:, None]
    lam2 = np.where(negative, -magnitudes[:, 0], magnitudes[:, 1])[:, None]
    base = spec.evaluate(x)

    def quotient(lam: np.ndarray) -> np.ndarray:
        return (spec.evaluate(x + lam * y) - base) / lam[:, 0]

    violations = quotient(lam1) - quotient(lam2)
    return violations, {'x': x, 'y': y, 'lambda1': lam1[:, 0], 'lambda2': lam2[:, 0]}


def norm_inequality(
    spec: NormSpec, rng: np.random.Generator, size: int
) -> Tuple[np.ndarray, dict]:
    """||u+v|| <= ||u|| + ||v|| - (2 - ||u/||u|| + v/||v||||) min(||u||, ||v||)."""
    u = _vectors(rng, size) * rng.uniform(0.1, 3.0, size=(size, 1))
    v = _vectors(rng, size) * rng.uniform(0.1, 3.0, size=(size, 1))
    nu = spec.evaluate(u)
    nv = spec.evaluate(v)
    directions = spec.evaluate(u / nu[:, None] + v / nv[:, None])
    bound = nu + nv - (2 - directions) * np.minimum(nu, nv)
    return spec.evaluate(u + v) - bound, {'u': u, 'v': v}


def euclidean_swap(
    spec: NormSpec, rng: np.random.Generator, size: int
) -> Tuple[np.ndarray, dict]:
    """In the Euclidean plane ||tx + y|| = ||x + ty|| whenever ||x|| = ||y||."""
    radius = rng.uniform(0.1, 3.0, size=(size, 1))
    x = normalize(spec, _vectors(rng, size)) * radius
    y = normalize(spec, _vectors(rng, size)) * radius
    t = rng.uniform(-5, 5, size=(size, 1))
    violations = np.abs(spec.evaluate(t * x + y) - spec.evaluate(x + t * y))
    return violations, {'x': x, 'y': y, 't': t[:, 0]}


FAMILIES = {
    'lemma-convexity': convexity,
    'lemma-monotone-quotient': monotone_quotient,
    'lemma-norm-inequality': norm_inequality,
    'lemma-euclidean-swap': euclidean_swap,
}

EUCLIDEAN_FAMILIES = frozenset({'lemma-euclidean-swap'})


def _family_report(
    claim_id: str, family: Family, norms: List[NormSpec], rng: np.random.Generator, n_samples: int
) -> BoundReport:
    worst_value = -np.inf
    worst_spec = norms[0]
    worst_witness: dict = {}
    # Samples are spread evenly over the pool, the first norms taking the remainder
    sizes = [n_samples // len(norms) + (i < n_samples % len(norms)) for i in range(len(norms))]
    for spec, size in zip(norms, sizes):
        if size == 0:
            continue
        violations, columns = family(spec, rng, size)
        k = int(np.argmax(violations))
        if violations[k] > worst_value:
            worst_value = float(violations[k])
            worst_spec = spec
            worst_witness = {
                name: np.atleast_1d(values[k]).tolist() for name, values in columns.items()
            }

    violation = max(worst_value, 0.0)
    passed = violation <= LEMMA_TOLERANCE
    return BoundReport(
        claim_id=claim_id,
        spec=worst_spec,
        params={'samples': float(n_samples)},
        lhs=violation,
        rhs=0.0,
        slack=-violation,
        passed=passed,
        status=ClaimStatus.PASS if passed else ClaimStatus.FAIL,
        tolerance=LEMMA_TOLERANCE,
        witness=None if passed else worst_witness,
    )


def skew_isosceles_example() -> BoundReport:
    """In l_inf, x = (0, 1) is skew isosceles orthogonal to y = (1, 0) for every t > 0."""
    spec = LpNorm(p=float('inf'))
    x = np.array([0.0, 1.0])
    y = np.array([1.0, 0.0])
    ts = np.geomspace(1e-2, 1e2, 41)[:, None]
    defects = np.abs(spec.evaluate(x + ts * y) - spec.evaluate(ts * x - y))
    violation = float(defects.max())
    passed = violation <= LEMMA_TOLERANCE
    return BoundReport(
        claim_id='skew-isosceles-example',
        spec=spec,
        lhs=violation,
        rhs=0.0,
        slack=-violation,
        passed=passed,
        status=ClaimStatus.PASS if passed else ClaimStatus.FAIL,
        tolerance=LEMMA_TOLERANCE,
        witness={'x': x.tolist(), 'y': y.tolist()},
    )


def run_lemma_suite(seed: int, n_samples: int) -> List[BoundReport]:
    if n_samples < 1:
        raise ParameterError(f'run_lemma_suite needs n_samples >= 1, got {n_samples}')
    rng = np.random.default_rng(seed)
    norms = random_norms(rng, POOL_SIZE)
    reports = [
        _family_report(
            claim_id,
            family,
            [LpNorm(p=2)] if claim_id in EUCLIDEAN_FAMILIES else norms,
            rng,
            n_samples,
        )
        for claim_id, family in FAMILIES.items()
    ]
    reports.append(skew_isosceles_example())
    for report in reports:
        logging.info(f'{report.claim_id}: max violation {report.lhs} ({report.status.value})')
    return sorted(reports, key=lambda report: report.claim_id)
