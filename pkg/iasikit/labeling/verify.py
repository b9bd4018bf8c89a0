# Copyright (c) iasikit authors. All rights reserved.
from dataclasses import asdict, dataclass
from typing import Optional, Sequence, Tuple, Union

from ..core import InvalidArgumentError, MissingLabelError, first_duplicate
from ..graph import Edge, Graph, edge_key
from ..sets import IntegerSet, sumset
from .setlabel import SetLabeling


@dataclass(frozen=True)
class Verdict:
    r"""Outcome of an IASI check. On failure `kind` is "vertex" or "edge"
    and `pair` names the two colliding elements."""
    ok: bool
    kind: Optional[str] = None
    pair: Optional[Tuple] = None
    message: str = "ok"

    def to_dict(self) -> dict:
        result = asdict(self)
        if self.pair is not None:
            result["pair"] = [list(p) if isinstance(p, tuple) else p
                              for p in self.pair]
        return result

    def __bool__(self) -> bool:
        return self.ok


def induced_edge_label(f: SetLabeling, e: Sequence[str]) -> IntegerSet:
    r"""f+(uv) = f(u) + f(v).

    Raises:
        MissingLabelError: an endpoint has no label
    """
    u, v = e
    return sumset(f[u], f[v])


def set_indexing_number(f: SetLabeling, element: Union[str, Sequence[str]]) -> int:
    r"""|f(v)| for a vertex id, |f+(uv)| for an edge (pair of vertex ids)."""
    if isinstance(element, str):
        return len(f[element])
    return len(induced_edge_label(f, element))


def _fmt_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def verify_iasi(G: Graph, f: SetLabeling) -> Verdict:
    r"""Check that `f` is an IASI of `G`: injective on V(G) and the induced
    edge labeling injective on E(G). The first collision found (in graph
    vertex / edge order) is reported.

    Raises:
        MissingLabelError: a vertex of `G` is unlabeled
        InvalidArgumentError: `f` labels a vertex that is not in `G`
    """
    for v in G.vertices:
        if v not in f:
            raise MissingLabelError(f"vertex {v!r} has no label")
    extra = [v for v in f if not G.has_vertex(v)]
    if extra:
        raise InvalidArgumentError(
            f"labeled vertices not in the graph: {', '.join(extra)}")

    vertices = G.vertices
    clash = first_duplicate(f[v] for v in vertices)
    if clash is not None:
        u, w = vertices[clash[0]], vertices[clash[1]]
        return Verdict(False, "vertex", (u, w),
                       f"vertices {u} and {w} share the label {f[u]}")

    edges = [edge_key(u, v) for u, v in G.edges]
    clash = first_duplicate(induced_edge_label(f, e) for e in edges)
    if clash is not None:
        a, b = edges[clash[0]], edges[clash[1]]
        return Verdict(
            False, "edge", (a, b),
            f"edges {_fmt_edge(a)} and {_fmt_edge(b)} share the induced label "
            f"{induced_edge_label(f, a)}")
    return Verdict(True)
