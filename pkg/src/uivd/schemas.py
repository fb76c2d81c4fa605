"""
Pydantic records for everything written to stdout, files or MCP results.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel

from .config import STATS_SCHEMA_VERSION
from .fis_detect import ForbiddenSubgraph
from .recognition import Recognition, UnitIntervalCertificate, UnitIntervalModel


def fraction_text(value: Fraction) -> str:
    """Exact "p/q" rendering; integers keep a denominator of 1."""
    return f"{value.numerator}/{value.denominator}"


class IntervalRecord(BaseModel):
    vertex: int
    lp: str
    rp: str


class CertificateRecord(BaseModel):
    kind: str
    vertices: List[int]


class RecognitionRecord(BaseModel):
    unit_interval: bool
    ordering: Optional[List[int]] = None
    model: Optional[List[IntervalRecord]] = None
    certificate: Optional[CertificateRecord] = None


class SolutionRecord(BaseModel):
    feasible: bool
    k: int
    deleted: List[int] = []


class StageTimings(BaseModel):
    modulator: float = 0.0
    reduction: float = 0.0
    picking: float = 0.0
    total: float = 0.0


class RunStats(BaseModel):
    """Kernelization run summary; bump STATS_SCHEMA_VERSION on any field change."""
    schema_version: int = STATS_SCHEMA_VERSION
    verdict: str
    input_n: int
    input_m: int
    k: int
    k_after: Optional[int] = None
    modulator_size: int
    rule_applications: Dict[str, int]
    blocks_before: int
    blocks_after: Optional[int] = None
    kernel_n: Optional[int] = None
    kernel_m: Optional[int] = None
    no_reason: Optional[str] = None
    shortcut: bool = False
    seconds: StageTimings


class VerifyRecord(BaseModel):
    agree: bool
    original_feasible: Optional[bool] = None
    kernel_feasible: Optional[bool] = None
    kernel_verdict: str
    input_n: int
    reduced_n: Optional[int] = None
    modulator_size: int
    opt: Optional[int] = None
    ratio_ok: Optional[bool] = None
    seed: Optional[int] = None


def model_records(model: UnitIntervalModel) -> List[IntervalRecord]:
    return [
        IntervalRecord(vertex=v, lp=fraction_text(model.lp(v)), rp=fraction_text(model.rp(v)))
        for v in model.ordering().order
    ]


def certificate_record(f: ForbiddenSubgraph) -> CertificateRecord:
    return CertificateRecord(kind=f.kind.value, vertices=list(f.vertices))


def recognition_record(result: Recognition) -> RecognitionRecord:
    if isinstance(result, UnitIntervalCertificate):
        return RecognitionRecord(
            unit_interval=True,
            ordering=list(result.ordering.order),
            model=model_records(result.model),
        )
    return RecognitionRecord(unit_interval=False, certificate=certificate_record(result))
