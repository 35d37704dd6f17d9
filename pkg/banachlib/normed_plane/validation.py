from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from banachlib.constants import AXIOM_TOLERANCE
from banachlib.exceptions import ParameterError
from banachlib.normed_plane.norms import NormSpec


class NormValidationReport(BaseModel):
    norm: str
    sample_count: int
    seed: int
    passed: bool
    max_homogeneity_violation: float
    max_triangle_violation: float
    max_symmetry_violation: float
    violated_axiom: Optional[str] = None
    witness: Optional[List[List[float]]] = None


def validate_norm(spec: NormSpec, sample_count: int, seed: int) -> NormValidationReport:
    """Sample random vectors and check homogeneity, symmetry and the triangle inequality."""
    if sample_count < 1:
        raise ParameterError(f'sample_count must be at least 1, got {sample_count}')

    rng = np.random.default_rng(seed)
    u = rng.normal(size=(sample_count, 2)) * rng.lognormal(sigma=1.0, size=(sample_count, 1))
    v = rng.normal(size=(sample_count, 2)) * rng.lognormal(sigma=1.0, size=(sample_count, 1))
    alpha = rng.normal(scale=3.0, size=sample_count)

    norm_u = spec.evaluate(u)
    norm_v = spec.evaluate(v)
    homogeneity = np.abs(spec.evaluate(alpha[:, None] * u) - np.abs(alpha) * norm_u)
    triangle = spec.evaluate(u + v) - norm_u - norm_v
    symmetry = np.abs(spec.evaluate(-u) - norm_u)

    report = NormValidationReport(
        norm=spec.to_text(),
        sample_count=sample_count,
        seed=seed,
        passed=True,
        max_homogeneity_violation=float(homogeneity.max()),
        max_triangle_violation=float(max(triangle.max(), 0.0)),
        max_symmetry_violation=float(symmetry.max()),
    )
    # Scale the tolerance with the magnitude of the samples
    scale = np.maximum(1.0, np.maximum(norm_u, norm_v))
    checks = [
        ('homogeneity', homogeneity / np.maximum(1.0, np.abs(alpha) * scale), [u]),
        ('triangle', triangle / scale, [u, v]),
        ('symmetry', symmetry / scale, [u]),
    ]
    for axiom, violations, witnesses in checks:
        worst = int(np.argmax(violations))
        if violations[worst] > AXIOM_TOLERANCE:
            report.passed = False
            report.violated_axiom = axiom
            report.witness = [w[worst].tolist() for w in witnesses]
            break

    return report
