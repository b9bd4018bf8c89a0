# Copyright (c) iasikit authors. All rights reserved.
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..core import IasiViolationError
from ..graph import Graph
from ..sets import is_ap_set, recognize_ap
from .kinds import ARITHMETIC_MULTIPLE, FIRST_KIND, EdgeKind, edge_kind
from .setlabel import SetLabeling
from .verify import induced_edge_label, verify_iasi

logger = logging.getLogger(__name__)


def edge_id(u: str, v: str) -> str:
    r"""The key of an edge in report maps: "u,v" in canonical order."""
    return f"{u},{v}" if u <= v else f"{v},{u}"


@dataclass(frozen=True)
class EdgeReport:
    kind: Optional[EdgeKind]
    set_indexing_number: int
    strong: bool
    ap: bool

    def to_dict(self) -> dict:
        return dict(kind=None if self.kind is None else self.kind.to_dict(),
                    set_indexing_number=self.set_indexing_number,
                    strong=self.strong,
                    ap=self.ap)

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeReport":
        kind = data.get("kind")
        return cls(None if kind is None else EdgeKind.from_dict(kind),
                   data["set_indexing_number"], data["strong"], data["ap"])


@dataclass(frozen=True)
class ClassificationReport:
    r"""Every IASI property verdict for one labeled graph.

    `per_edge` is keyed by :func:`edge_id`. An edge has no `kind` unless
    both endpoint labels are AP-sets with at least three terms.
    """
    vertex_arithmetic: bool
    edge_arithmetic: bool
    arithmetic: bool
    isoarithmetic: bool
    biarithmetic: bool
    semi_arithmetic: bool
    semi_arithmetic_first_kind: bool
    semi_arithmetic_second_kind: bool
    strong: bool
    strongly_uniform: bool
    edge_uniform_k: Optional[int]
    vertex_uniform_l: Optional[int]
    per_edge: Dict[str, EdgeReport] = field(default_factory=dict)

    def to_dict(self) -> dict:
        result = {
            name: getattr(self, name)
            for name in self.__dataclass_fields__ if name != "per_edge"
        }
        result["per_edge"] = {e: r.to_dict() for e, r in self.per_edge.items()}
        return result

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationReport":
        fields = dict(data)
        fields["per_edge"] = {
            e: EdgeReport.from_dict(r)
            for e, r in data.get("per_edge", {}).items()
        }
        return cls(**fields)

    def flags(self) -> Dict[str, object]:
        r"""The graph-level fields, for tabular display."""
        return {k: v for k, v in self.to_dict().items() if k != "per_edge"}


def _common(values: List[int]) -> Optional[int]:
    distinct = set(values)
    return distinct.pop() if len(distinct) == 1 else None


def classify(G: Graph, f: SetLabeling) -> ClassificationReport:
    r"""Classify the labeled graph against every IASI variety.

    Vertex and edge labels only count as AP-sets when they have at least
    three elements. Global properties are conjunctions over edges, so a
    graph with mixed edge kinds is neither first nor second kind.

    Raises:
        IasiViolationError: `f` is not an IASI of `G`
        MissingLabelError: a vertex is unlabeled

    Example:
        >>> G = Graph(edges=[("u", "v")])
        >>> f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8]})
        >>> report = classify(G, f)
        >>> report.semi_arithmetic_first_kind, report.strong
        (True, True)
    """
    verdict = verify_iasi(G, f)
    if not verdict.ok:
        raise IasiViolationError(verdict)

    descriptors = {
        v: recognize_ap(f[v]) if len(f[v]) >= 3 else None
        for v in G.vertices
    }
    vertex_arithmetic = all(D is not None for D in descriptors.values())

    per_edge: Dict[str, EdgeReport] = {}
    for u, v in G.edges:
        label = induced_edge_label(f, (u, v))
        P, Q = descriptors[u], descriptors[v]
        kind = edge_kind(P, Q) if P is not None and Q is not None else None
        per_edge[edge_id(u, v)] = EdgeReport(
            kind=kind,
            set_indexing_number=len(label),
            strong=len(label) == len(f[u]) * len(f[v]),
            ap=is_ap_set(label, min_length=3))
    edges = list(per_edge.values())
    kinds = [r.kind for r in edges]

    edge_arithmetic = all(r.ap for r in edges)
    arithmetic = vertex_arithmetic and edge_arithmetic
    differences = {D.difference for D in descriptors.values() if D is not None}
    strong = all(r.strong for r in edges)
    edge_uniform_k = _common([r.set_indexing_number for r in edges])

    report = ClassificationReport(
        vertex_arithmetic=vertex_arithmetic,
        edge_arithmetic=edge_arithmetic,
        arithmetic=arithmetic,
        isoarithmetic=arithmetic and len(differences) == 1,
        biarithmetic=arithmetic and bool(edges) and all(
            k.relation == ARITHMETIC_MULTIPLE for k in kinds),
        semi_arithmetic=vertex_arithmetic and bool(edges) and not any(
            r.ap for r in edges),
        semi_arithmetic_first_kind=vertex_arithmetic and bool(edges) and all(
            k.relation == FIRST_KIND for k in kinds),
        semi_arithmetic_second_kind=vertex_arithmetic and bool(edges) and all(
            k.is_second_kind for k in kinds),
        strong=strong,
        strongly_uniform=strong and edge_uniform_k is not None,
        edge_uniform_k=edge_uniform_k,
        vertex_uniform_l=_common([len(f[v]) for v in G.vertices]),
        per_edge=per_edge)
    logger.debug(f"classified {G!r}: {report.flags()}")
    return report
