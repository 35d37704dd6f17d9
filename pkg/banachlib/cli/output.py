import csv
import io
import sys
from typing import Dict, List, Optional, Sequence, Union

from pydantic import BaseModel

from banachlib import __version__
from banachlib.cli.config import OutputFormat, RunConfig
from banachlib.constants import UTF8ENCODING
from banachlib.geometric_constants import ConstantEstimate
from banachlib.utils import format_csv_real
from banachlib.verification import BoundReport

SWEEP_HEADER = ('t', 'value', 'theta_x', 'theta_y', 'grid_n')
REPORT_HEADER = ('claim_id', 'norm', 'params', 'lhs', 'rhs', 'slack', 'status')
ORTH_HEADER = ('relation', 't', 'accepted', 'defect')


class WitnessRecord(BaseModel):
    theta_x: float
    theta_y: float
    x: List[float]
    y: List[float]


class EstimateRecord(BaseModel):
    kind: str
    norm: str
    params: Dict[str, float]
    value: float
    witness: WitnessRecord
    grid_n: int
    refine_iters: int
    bound_side: str
    details: Dict[str, float]

    @classmethod
    def of(cls, result: ConstantEstimate) -> 'EstimateRecord':
        witness = result.witness
        return cls(
            kind=result.kind.name.value,
            norm=result.norm,
            params=result.kind.params,
            value=result.value,
            witness=WitnessRecord(
                theta_x=witness.x.theta,
                theta_y=witness.y.theta,
                x=witness.x.point.as_list(),
                y=witness.y.point.as_list(),
            ),
            grid_n=result.grid_n,
            refine_iters=result.refine_iters,
            bound_side=result.bound_side.value,
            details=result.details,
        )


class OrthRecord(BaseModel):
    relation: str
    t: Optional[float] = None
    x: List[float]
    y: List[float]
    accepted: bool
    defect: float


Record = Union[EstimateRecord, BoundReport, OrthRecord]


class JsonReport(BaseModel):
    tool_version: str
    config: RunConfig
    results: List[Record]


def json_text(config: RunConfig, results: Sequence[Record]) -> str:
    report = JsonReport(tool_version=__version__, config=config, results=list(results))
    return report.model_dump_json(indent=2) + '\n'


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def estimates_csv(ts: Sequence[Optional[float]], results: Sequence[EstimateRecord]) -> str:
    rows = [
        (
            '' if t is None else format_csv_real(t),
            format_csv_real(record.value),
            format_csv_real(record.witness.theta_x),
            format_csv_real(record.witness.theta_y),
            str(record.grid_n),
        )
        for t, record in zip(ts, results)
    ]
    return _csv_text(SWEEP_HEADER, rows)


def reports_csv(reports: Sequence[BoundReport]) -> str:
    rows = [
        (
            report.claim_id,
            report.spec.to_text(),
            ';'.join(f'{key}={format_csv_real(value)}' for key, value in report.params.items()),
            format_csv_real(report.lhs),
            format_csv_real(report.rhs),
            format_csv_real(report.slack),
            report.status.value,
        )
        for report in reports
    ]
    return _csv_text(REPORT_HEADER, rows)


def orth_csv(record: OrthRecord) -> str:
    t = '' if record.t is None else format_csv_real(record.t)
    row = (record.relation, t, str(record.accepted).lower(), format_csv_real(record.defect))
    return _csv_text(ORTH_HEADER, [row])


def emit(config: RunConfig, text: str) -> None:
    """Write to --out when given, else to stdout."""
    if config.out_path is None:
        sys.stdout.write(text)
        return
    with open(config.out_path, 'w', encoding=UTF8ENCODING, newline='\n') as file:
        file.write(text)


def render(
    config: RunConfig,
    results: Sequence[Record],
    csv_text: str,
) -> str:
    return csv_text if config.format is OutputFormat.CSV else json_text(config, results)
