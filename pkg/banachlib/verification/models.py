from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, field_serializer

from banachlib.constants import LOWER_BOUND_SLACK, UPPER_BOUND_TOLERANCE
from banachlib.normed_plane import AnyNormSpec, NormSpec


class ClaimStatus(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INFO = 'INFO'
    """A lower bound missed by less than the slack, the estimate may undershoot the supremum."""
    NOTE = 'NOTE'
    NOT_APPLICABLE = 'NOT_APPLICABLE'


class BoundReport(BaseModel):
    """Outcome of one inequality on one space: lhs compared with rhs.

    `slack` is positive when the inequality holds and `passed` is slack >= -tolerance.
    """

    model_config = ConfigDict(frozen=True)

    claim_id: str
    spec: AnyNormSpec
    params: Dict[str, float] = {}
    lhs: float
    rhs: float
    slack: float
    passed: bool
    status: ClaimStatus
    tolerance: float
    witness: Optional[Dict[str, List[float]]] = None
    note: Optional[str] = None

    @field_serializer('spec')
    def spec_text(self, spec: NormSpec) -> str:
        return spec.to_text()


def within_claim(
    claim_id: str,
    spec: NormSpec,
    value: float,
    bound: float,
    tolerance: float,
    params: Optional[Dict[str, float]] = None,
    witness: Optional[Dict[str, List[float]]] = None,
) -> BoundReport:
    """value <= bound up to tolerance."""
    slack = bound - value
    passed = slack >= -tolerance
    return BoundReport(
        claim_id=claim_id,
        spec=spec,
        params=params or {},
        lhs=value,
        rhs=bound,
        slack=slack,
        passed=passed,
        status=ClaimStatus.PASS if passed else ClaimStatus.FAIL,
        tolerance=tolerance,
        witness=witness,
    )


def upper_claim(
    claim_id: str,
    spec: NormSpec,
    value: float,
    bound: float,
    params: Optional[Dict[str, float]] = None,
    witness: Optional[Dict[str, List[float]]] = None,
) -> BoundReport:
    """value <= bound, where value is a lower estimate of a supremum: checked strictly."""
    return within_claim(claim_id, spec, value, bound, UPPER_BOUND_TOLERANCE, params, witness)


def lower_claim(
    claim_id: str,
    spec: NormSpec,
    value: float,
    bound: float,
    params: Optional[Dict[str, float]] = None,
    witness: Optional[Dict[str, List[float]]] = None,
) -> BoundReport:
    """value >= bound, where value is a lower estimate of a supremum: small misses are INFO."""
    slack = value - bound
    if slack >= 0:
        status = ClaimStatus.PASS
    elif slack >= -LOWER_BOUND_SLACK:
        status = ClaimStatus.INFO
    else:
        status = ClaimStatus.FAIL
    return BoundReport(
        claim_id=claim_id,
        spec=spec,
        params=params or {},
        lhs=value,
        rhs=bound,
        slack=slack,
        passed=slack >= -LOWER_BOUND_SLACK,
        status=status,
        tolerance=LOWER_BOUND_SLACK,
        witness=witness,
    )


def agreement_claim(
    claim_id: str,
    spec: NormSpec,
    left: bool,
    right: bool,
    params: Optional[Dict[str, float]] = None,
    note: Optional[str] = None,
) -> BoundReport:
    """Two conditions that must hold together or fail together."""
    slack = -abs(float(left) - float(right))
    return BoundReport(
        claim_id=claim_id,
        spec=spec,
        params=params or {},
        lhs=float(left),
        rhs=float(right),
        slack=slack,
        passed=slack >= 0,
        status=ClaimStatus.PASS if slack >= 0 else ClaimStatus.FAIL,
        tolerance=0.0,
        note=note,
    )


def remark(
    claim_id: str,
    spec: NormSpec,
    status: ClaimStatus,
    note: str,
    lhs: float = 0.0,
    rhs: float = 0.0,
    params: Optional[Dict[str, float]] = None,
    witness: Optional[Dict[str, List[float]]] = None,
) -> BoundReport:
    """A NOTE or NOT_APPLICABLE report, carrying the measured quantities for reference."""
    slack = rhs - lhs
    return BoundReport(
        claim_id=claim_id,
        spec=spec,
        params=params or {},
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        passed=slack >= 0,
        status=status,
        tolerance=0.0,
        witness=witness,
        note=note,
    )


def failed(reports: List[BoundReport]) -> List[BoundReport]:
    return [report for report in reports if report.status is ClaimStatus.FAIL]
