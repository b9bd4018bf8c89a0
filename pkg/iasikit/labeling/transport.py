# Copyright (c) iasikit authors. All rights reserved.
import logging
from typing import NamedTuple, Optional, Sequence

from ..core import IasiViolationError
from ..graph import ElementCorrespondence, Graph, apply_transform
from .setlabel import SetLabeling
from .verify import Verdict, induced_edge_label, verify_iasi

logger = logging.getLogger(__name__)


class TransportResult(NamedTuple):
    graph: Graph
    labeling: SetLabeling
    correspondence: ElementCorrespondence
    verdict: Verdict


def transport_labeling(kind: str,
                       G: Graph,
                       f: SetLabeling,
                       edge: Optional[Sequence[str]] = None,
                       vertex: Optional[str] = None) -> TransportResult:
    r"""Apply a graph transform and carry the labeling across it.

    A derived vertex that stands for a vertex of `G` keeps that vertex's
    label; one that stands for an edge (line/total graph vertices, the
    subdivision vertex, the contracted vertex) gets the induced edge label.
    Topological reduction leaves every label in place, so the new edge uw is
    labeled f(u) + f(w).

    The derived labeling is re-verified: a collision is returned in
    `verdict`, it is not raised.

    Args:
        kind (str): "line", "total", "subdivide", "contract" or "reduce".
        G (Graph): source graph.
        f (SetLabeling): an IASI of `G`.
        edge (tuple[str, str], optional): edge for subdivide/contract.
        vertex (str, optional): vertex for reduce.

    Raises:
        IasiViolationError: `f` is not an IASI of `G`
    """
    verdict = verify_iasi(G, f)
    if not verdict.ok:
        raise IasiViolationError(verdict)
    H, correspondence = apply_transform(kind, G, edge=edge, vertex=vertex)
    labels = {}
    for v in H.vertices:
        origin = correspondence.origin(v)
        labels[v] = f[origin] if isinstance(origin, str) \
            else induced_edge_label(f, origin)
    g = SetLabeling(labels, check_injective=False)
    derived = verify_iasi(H, g)
    if not derived.ok:
        logger.info(f"transported labeling is not an IASI: {derived.message}")
    return TransportResult(H, g, correspondence, derived)
