from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from ckmarkov.classify.compare import ClassificationReport

VerdictValue = bool | Literal["undecided"]


class ReportResponse(BaseModel):
    stable_isomorphic: VerdictValue
    isomorphic: VerdictValue
    coe: VerdictValue
    flip_coe: VerdictValue
    flip_flow_equivalent: VerdictValue
    flow_equivalent: VerdictValue
    evidence: dict[str, list[str]]

    @classmethod
    def from_report(cls, report: ClassificationReport) -> ReportResponse:
        fields = {name: v.to_json() for name, v in report.verdicts().items()}
        return cls(**fields, evidence=report.evidence)
