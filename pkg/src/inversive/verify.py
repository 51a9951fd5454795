"""Reconcile analytic predictions with exhaustive enumeration."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from .analytic import CaseAnalysis, CaseLabel, classify, predict_period, predict_structure
from .enumerator import DEFAULT_BUDGET, build_graph, decompose
from .iprng import Params, PeriodInfo
from .ring import Modulus
from .structure import Verdict, structure_text

FULL_PERIOD_CHECK = 10**4
SAMPLE_SIZE = 10**3


@dataclass
class VerifyReport:
    params: Params
    label: CaseLabel
    structure_match: Optional[bool]  # None: no analytic claim to compare
    predicted: str = ""
    enumerated: str = ""
    period_mismatches: List[Tuple[int, object, PeriodInfo]] = field(default_factory=list)
    periods_checked: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.structure_match is not False and not self.period_mismatches

    def to_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "label": self.label.value,
            "structure_match": self.structure_match,
            "predicted": self.predicted,
            "enumerated": self.enumerated,
            "periods_checked": self.periods_checked,
            "period_mismatches": [
                {
                    "x0": x0,
                    "predicted": pred.value if isinstance(pred, Verdict) else list(pred),
                    "measured": list(meas),
                }
                for x0, pred, meas in self.period_mismatches
            ],
            "notes": list(self.notes),
            "ok": self.ok,
        }


def _check_tree_indegrees(A: CaseAnalysis, graph) -> bool:
    """In-degree law of the a-in-(p) tree: p^logp(a) for internal nodes, p^(e-1) at b."""
    P = A.params
    internal = P.p**A.logp_a
    for y, d in enumerate(graph.in_degree.tolist()):
        if y == P.b:
            if d != P.p ** (P.e - 1):
                return False
        elif d not in (0, internal):
            return False
    return True


def verify_structure(P: Params, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    A = classify(P)
    graph = build_graph(P, budget)
    exact = decompose(graph)
    enumerated = exact.to_graph_structure()
    predicted = predict_structure(P, A)

    report = VerifyReport(P, A.label, None, structure_text(predicted), enumerated.text())
    if isinstance(predicted, Verdict):
        report.notes.append(f"no analytic claim ({predicted.value}); enumerator only")
    else:
        match = predicted.canonical() == enumerated
        if match and A.label is CaseLabel.A_IN_P:
            match = _check_tree_indegrees(A, graph)
            if not match:
                report.notes.append("tree in-degree law violated")
        report.structure_match = match

    q = P.q
    states: Iterable[int] = range(q) if q <= FULL_PERIOD_CHECK else range(SAMPLE_SIZE)
    pre, per = exact.pre_period.tolist(), exact.period.tolist()
    for x0 in states:
        measured = PeriodInfo(pre[x0], per[x0])
        got = predict_period(x0, P, A)
        report.periods_checked += 1
        if got != measured:
            report.period_mismatches.append((x0, got, measured))
    return report


@dataclass
class GridScanResult:
    failures: List[VerifyReport]
    total: int
    by_label: Counter

    @property
    def ok(self) -> bool:
        return not self.failures


def _scan_modulus(p: int, e: int, budget: int) -> Tuple[List[VerifyReport], int, Counter]:
    m = Modulus(p, e)
    failures, labels = [], Counter()
    for a in range(m.q):
        for b in range(m.q):
            rep = verify_structure(Params(m, a, b), budget)
            labels[rep.label.value] += 1
            if not rep.ok:
                failures.append(rep)
    return failures, m.q * m.q, labels


def grid_scan(
    p_list: Sequence[int],
    e_max: int,
    budget: int = DEFAULT_BUDGET,
    n_jobs: int = 1,
    e_min: int = 1,
) -> GridScanResult:
    """Verify every (a, b) pair for each p in ``p_list`` and e_min <= e <= e_max.

    Moduli are independent jobs; results are merged in input order.
    """
    jobs = []
    for p in p_list:
        for e in range(e_min, e_max + 1):
            if p**e > budget:
                raise ValueError(f"p^e = {p**e} exceeds budget {budget}")
            jobs.append((p, e))
    if n_jobs == 1:
        parts = [_scan_modulus(p, e, budget) for p, e in jobs]
    else:
        parts = Parallel(n_jobs=n_jobs)(delayed(_scan_modulus)(p, e, budget) for p, e in jobs)
    result = GridScanResult([], 0, Counter())
    for failures, total, labels in parts:
        result.failures.extend(failures)
        result.total += total
        result.by_label.update(labels)
    return result
