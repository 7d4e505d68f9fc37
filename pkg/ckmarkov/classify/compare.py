from __future__ import annotations

import logging
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ckmarkov.classify.invariants import (
    InvariantTriple,
    bowen_franks,
    invariant_triple,
    require_classifiable,
)
from ckmarkov.core.verdict import Verdict
from ckmarkov.groups.abelian import groups_isomorphic
from ckmarkov.groups.pointed import decide_pointed
from ckmarkov.linalg.determinant import det_one_minus
from ckmarkov.surgery.binary import BinaryMatrix
from ckmarkov.surgery.constructions import bar_construction
from ckmarkov.surgery.maps import phi_check

logger = logging.getLogger(__name__)

_CITED = "by the cited classification theorems"

RELATIONS = (
    "stable_isomorphic",
    "isomorphic",
    "coe",
    "flip_coe",
    "flip_flow_equivalent",
    "flow_equivalent",
)


@dataclass(frozen=True)
class ClassificationReport:
    stable_isomorphic: Verdict
    isomorphic: Verdict
    coe: Verdict
    flip_coe: Verdict
    flip_flow_equivalent: Verdict
    flow_equivalent: Verdict
    evidence: dict[str, list[str]] = field(default_factory=dict, compare=False)

    def verdicts(self) -> dict[str, Verdict]:
        return {name: getattr(self, name) for name in RELATIONS}

    def implications_hold(self) -> bool:
        """isomorphic ⇒ stable, coe ⇒ isomorphic, coe ⇒ flip_coe, flow ⇒ flip_flow."""
        t = Verdict.TRUE
        return all(
            (
                self.isomorphic is not t or self.stable_isomorphic is t,
                self.coe is not t or self.isomorphic is t,
                self.coe is not t or self.flip_coe is t,
                self.flow_equivalent is not t or self.flip_flow_equivalent is t,
            )
        )


def flow_equivalent(a: BinaryMatrix, b: BinaryMatrix) -> Verdict:
    """(BF(A), sgn det(1 - A)) against (BF(B), sgn det(1 - B))."""
    require_classifiable(a, "A")
    require_classifiable(b, "B")
    same_group = groups_isomorphic(bowen_franks(a), bowen_franks(b))
    da, db = det_one_minus(a), det_one_minus(b)
    return Verdict.of(same_group and (da > 0) - (da < 0) == (db > 0) - (db < 0))


def _flip_witness(ta: InvariantTriple, b: BinaryMatrix, max_order: int | None) -> str:
    """Which of B, B̄ has A's full triple (pointed group and sign)."""
    for name, candidate in (("B", b), ("bar(B)", bar_construction(b))):
        tc = invariant_triple(candidate, name)
        verdict = decide_pointed(ta.pointed, tc.pointed, max_order).verdict
        if verdict is Verdict.UNDECIDED:
            return "undecided"
        if verdict is Verdict.TRUE and tc.sign == ta.sign:
            return name
    return "none"


def compare(a: BinaryMatrix, b: BinaryMatrix, max_order: int | None = None) -> ClassificationReport:
    """Decide the five equivalence relations (plus stable isomorphism) from invariants."""
    ta = invariant_triple(a, "A")
    tb = invariant_triple(b, "B")
    evidence: dict[str, list[str]] = {name: [] for name in RELATIONS}

    stable = Verdict.of(groups_isomorphic(ta.group, tb.group))
    evidence["stable_isomorphic"].append(f"G(A) = {ta.group}, G(B) = {tb.group}")

    pointed = decide_pointed(ta.pointed, tb.pointed, max_order)
    isomorphic = pointed.verdict
    evidence["isomorphic"].append(f"u_A = {ta.u}, u_B = {tb.u}; decided by {pointed.path}")
    if pointed.detail:
        evidence["isomorphic"].append(pointed.detail)
    for base, other in ((a, b), (b, a)):
        if other == bar_construction(base):
            evidence["isomorphic"].append(f"phi_check = {phi_check(base)}: Φ carries u of the base to u of its bar")
            break

    same_sign = ta.sign == tb.sign
    coe = isomorphic.both(Verdict.of(same_sign))
    evidence["coe"].append(f"det(1-A) = {ta.determinant}, det(1-B) = {tb.determinant}")

    flip_coe = isomorphic
    evidence["flip_coe"].append(f"equals isomorphic {_CITED}")
    evidence["flip_coe"].append(f"triple of A matches: {_flip_witness(ta, b, max_order)}")

    flip_flow = stable
    evidence["flip_flow_equivalent"].append(f"equals stable_isomorphic {_CITED}")

    flow = flow_equivalent(a, b)
    evidence["flow_equivalent"].append(f"BF(A) = {bowen_franks(a)}, BF(B) = {bowen_franks(b)}")
    evidence["flow_equivalent"].append(f"signs {ta.sign} vs {tb.sign}")

    if isomorphic is Verdict.UNDECIDED:
        note = "pointed isomorphism undecided; no conclusion is claimed"
        for name in ("isomorphic", "coe", "flip_coe"):
            evidence[name].append(note)

    report = ClassificationReport(
        stable_isomorphic=stable,
        isomorphic=isomorphic,
        coe=coe,
        flip_coe=flip_coe,
        flip_flow_equivalent=flip_flow,
        flow_equivalent=flow,
        evidence=evidence,
    )
    logger.info(
        "compare.report",
        extra={name: verdict.value for name, verdict in report.verdicts().items()},
    )
    return report


def batch_compare(
    pairs: Iterable[tuple[BinaryMatrix, BinaryMatrix]],
    workers: int = 4,
    max_order: int | None = None,
) -> list[ClassificationReport]:
    """compare() over many pairs; results keep the input order."""
    pairs = list(pairs)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda ab: compare(ab[0], ab[1], max_order), pairs))
