# Copyright (c) iasikit authors. All rights reserved.
import logging
from typing import Any, Dict, List, Optional, Tuple

from ..construct import ConstructionParams
from ..core import AUDITS, InvalidArgumentError
from ..graph import small_graph_family
from ..sets import APSetDescriptor
from ..utils import Timer, track_parallel_progress, track_progress
from .bounds import SearchBounds, enumerate_ap_pairs
from .graphs import GraphAudit
from .pairs import Outcome, PairAudit
from .report import AuditReport, Counterexample

logger = logging.getLogger(__name__)

PairTask = Tuple[str, Tuple[int, int, int], Tuple[int, int, int]]


# short ids accepted wherever an audit id is
AUDIT_ALIASES: Dict[str, str] = {
    "T1.3": "arithmetic_multiple",
    "T2.3": "first_kind_strong",
    "C2.4": "first_kind_trivial_classes",
    "P2.6": "first_kind_composite_index",
    "T2.7": "first_kind_uniform",
    "T2.8": "second_kind_strong",
    "T2.9": "second_kind_maximal_class",
}


def resolve_audit_id(theorem_id: str) -> str:
    r"""The registered id for `theorem_id`, which may be a short alias."""
    return AUDIT_ALIASES.get(theorem_id, theorem_id)


def list_audits() -> List[Tuple[str, str]]:
    r"""(id, description) of every registered audit, sorted by id."""
    return sorted((name, cls.description) for name, cls in AUDITS)


def _get_audit(theorem_id: str):
    try:
        return AUDITS.get(theorem_id)()
    except KeyError:
        raise InvalidArgumentError(
            f"unknown audit {theorem_id!r}; expected one of "
            f"{', '.join(name for name, _ in list_audits())}"
            f" or an alias in {', '.join(sorted(AUDIT_ALIASES))}")


def _evaluate_pair(task: PairTask) -> Optional[Outcome]:
    r"""Worker body; module level so the process pool can pickle it."""
    theorem_id, p, q = task
    checker = AUDITS.get(theorem_id)()
    P, Q = APSetDescriptor(*p), APSetDescriptor(*q)
    if not checker.in_scope(P, Q):
        return None
    return checker.evaluate(P, Q)


def _confirm(theorem_id: str, p, q, observed, rechecked) -> None:
    if rechecked != observed:
        raise RuntimeError(
            f"{theorem_id}: the oracle gives {rechecked!r} for {p} / {q} "
            f"but the audit observed {observed!r}")


def _run_pairs(theorem_id: str, checker: PairAudit, bounds: SearchBounds,
               nproc: int, progress: bool) -> AuditReport:
    tasks = [(theorem_id, P.as_tuple(), Q.as_tuple())
             for P, Q in enumerate_ap_pairs(bounds)]
    logger.info(f"{theorem_id}: searching {len(tasks)} descriptor pairs "
                f"within {bounds.to_dict()}")
    if nproc > 1:
        outcomes = track_parallel_progress(_evaluate_pair,
                                           tasks,
                                           nproc,
                                           chunksize=64,
                                           show_progress=progress)
    elif progress:
        outcomes = track_progress(_evaluate_pair, tasks)
    else:
        outcomes = [_evaluate_pair(task) for task in tasks]

    report = AuditReport(theorem_id, bounds.to_dict())
    tally: Dict[str, int] = {}
    for (_, p, q), outcome in sorted(zip(tasks, outcomes)):
        if outcome is None:
            continue
        report.checked += 1
        for reading, agrees in (outcome.tally or {}).items():
            tally[reading] = tally.get(reading, 0) + int(agrees)
        if not outcome.mismatch:
            continue
        P, Q = APSetDescriptor(*p), APSetDescriptor(*q)
        _confirm(theorem_id, P, Q, outcome.observed, checker.reverify(P, Q))
        report.counterexamples.append(
            Counterexample(P, Q, outcome.expected, outcome.observed))
    if tally:
        report.details = {
            reading: dict(checked=report.checked,
                          agree=agree,
                          rate=round(agree / report.checked, 6))
            for reading, agree in sorted(tally.items())
        }
    return report


def _run_graphs(theorem_id: str, checker: GraphAudit,
                params: Dict[str, Any]) -> AuditReport:
    max_vertices = params.get("max_vertices", 6)
    construction = ConstructionParams(
        **{k: params[k] for k in ("m", "n", "d", "k") if k in params})
    family = list(small_graph_family(max_vertices, checker.bipartite_only))
    logger.info(f"{theorem_id}: running over {len(family)} graphs with at "
                f"most {max_vertices} vertices")
    report = AuditReport(theorem_id,
                         dict(max_vertices=max_vertices,
                              bipartite_only=checker.bipartite_only))
    for name, G in family:
        for instance in checker.instances(name, G, construction):
            report.checked += 1
            if instance.expected == instance.observed:
                continue
            _confirm(theorem_id, instance.p, instance.q, instance.observed,
                     checker.reverify(instance.witness))
            report.counterexamples.append(
                Counterexample(instance.p, instance.q, instance.expected,
                               instance.observed))
    return report


def audit(theorem_id: str,
          bounds: Optional[SearchBounds] = None,
          nproc: int = 1,
          progress: bool = False,
          params: Optional[Dict[str, Any]] = None) -> AuditReport:
    r"""Run a registered audit and return its report.

    Pair audits enumerate every descriptor pair within `bounds`; graph
    audits run over the small-graph family, configured by `params` (keys
    m, n, d, k, max_vertices). Every counterexample is recomputed by the
    oracle before it is reported, and reports are sorted so that identical
    inputs give identical output for any `nproc`.

    Args:
        theorem_id (str): a registered audit id, see :func:`list_audits`.
        bounds (SearchBounds, optional): descriptor box for pair audits.
        nproc (int): worker processes for pair audits.
        progress (bool): draw a progress bar on stderr.
        params (dict, optional): graph audit parameters.

    Raises:
        InvalidArgumentError: unknown `theorem_id`
    """
    theorem_id = resolve_audit_id(theorem_id)
    checker = _get_audit(theorem_id)
    timer = Timer(print_tmpl=f"{theorem_id} finished in {{:.3f}}s",
                  logger=logger)
    with timer:
        if isinstance(checker, PairAudit):
            report = _run_pairs(theorem_id, checker, bounds or SearchBounds(),
                                nproc, progress)
        else:
            report = _run_graphs(theorem_id, checker, dict(params or {}))
    logger.info(f"{theorem_id}: checked {report.checked}, "
                f"{len(report.counterexamples)} counterexamples")
    return report
