# Copyright (c) iasikit authors. All rights reserved.
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..core import (TRANSFORMS, InvalidArgumentError, PreconditionError)
from .simple import Edge, Graph, edge_key

logger = logging.getLogger(__name__)

# the element of the source graph a derived vertex stands for
Element = Union[str, Edge]


def edge_vertex_id(u: str, v: str) -> str:
    u, v = edge_key(u, v)
    return f"e:{u}-{v}"


def contraction_vertex_id(u: str, v: str) -> str:
    u, v = edge_key(u, v)
    return f"c:{u}+{v}"


def subdivision_vertex_id(G: Graph) -> str:
    k = 1
    while G.has_vertex(f"s:{k}"):
        k += 1
    return f"s:{k}"


@dataclass(frozen=True)
class ElementCorrespondence:
    r"""Maps every vertex of a derived graph to the source element it came
    from: a vertex id (str) or an edge (tuple of two vertex ids)."""
    vertex_origin: Dict[str, Element] = field(default_factory=dict)

    def origin(self, v: str) -> Element:
        return self.vertex_origin[v]

    def from_edges(self) -> List[str]:
        return [v for v, o in self.vertex_origin.items() if isinstance(o, tuple)]

    def from_vertices(self) -> List[str]:
        return [v for v, o in self.vertex_origin.items() if isinstance(o, str)]

    @classmethod
    def identity(cls, G: Graph) -> "ElementCorrespondence":
        return cls({v: v for v in G.vertices})


def _fresh(G: Graph, ids: Iterable[str]):
    for v in ids:
        if G.has_vertex(v):
            raise InvalidArgumentError(
                f"derived vertex id {v!r} clashes with an existing vertex")


def line_graph(G: Graph) -> Tuple[Graph, ElementCorrespondence]:
    r"""L(G): one vertex per edge, adjacent iff the edges share an endpoint.

    Raises:
        InvalidArgumentError: `G` has no edges, or two edges map to the
            same derived id
    """
    if G.number_of_edges() == 0:
        raise InvalidArgumentError("the line graph of an edgeless graph is empty")
    origin: Dict[str, Element] = {}
    for u, v in G.edges:
        ev = edge_vertex_id(u, v)
        if ev in origin:
            raise InvalidArgumentError(
                f"derived vertex id {ev!r} names both edge {origin[ev]} and "
                f"edge {(u, v)}")
        origin[ev] = (u, v)
    L = nx.line_graph(G.nx)
    edges = [(edge_vertex_id(*a), edge_vertex_id(*b)) for a, b in L.edges]
    # a single-edge graph gives a one-vertex line graph
    return Graph(origin, edges, allow_isolated=True), ElementCorrespondence(origin)


def total_graph(G: Graph) -> Tuple[Graph, ElementCorrespondence]:
    r"""T(G): vertices are the vertices and edges of G; two are adjacent when
    the elements are adjacent vertices, edges sharing an endpoint, or a vertex
    incident with an edge."""
    G.validate()
    L, lc = line_graph(G)
    _fresh(G, L.vertices)
    origin: Dict[str, Element] = {v: v for v in G.vertices}
    origin.update(lc.vertex_origin)
    incidence = []
    for u, v in G.edges:
        ev = edge_vertex_id(u, v)
        incidence.extend([(u, ev), (v, ev)])
    T = Graph(origin, list(G.edges) + list(L.edges) + incidence)
    return T, ElementCorrespondence(origin)


def subdivide(G: Graph, e: Sequence[str]) -> Tuple[Graph, str]:
    r"""Replace edge uv by the path u-w-v through a fresh vertex w.

    Raises:
        NotFoundError: `e` is not an edge of `G`
    """
    u, v = G.require_edge(*e)
    w = subdivision_vertex_id(G)
    edges: List[Edge] = []
    for edge in G.edges:
        if edge == (u, v):
            edges.extend([(u, w), (w, v)])
        else:
            edges.append(edge)
    return Graph(list(G.vertices) + [w], edges, allow_isolated=True), w


def contract(G: Graph, e: Sequence[str]) -> Tuple[Graph, str]:
    r"""Merge the endpoints of `e` into a fresh vertex; parallel edges are
    merged and the loop from `e` itself is dropped.

    Raises:
        NotFoundError: `e` is not an edge of `G`
    """
    u, v = G.require_edge(*e)
    w = contraction_vertex_id(u, v)
    _fresh(G, [w])
    H = nx.contracted_nodes(G.nx, u, v, self_loops=False, copy=True)
    rename = {u: w}
    vertices = [x for x in G.vertices if x not in (u, v)] + [w]
    edges = [(rename.get(a, a), rename.get(b, b)) for a, b in H.edges]
    return Graph(vertices, edges, allow_isolated=True), w


def topological_reduction(G: Graph, v: str) -> Graph:
    r"""Delete a degree-2 vertex `v` and join its two neighbours.

    Raises:
        PreconditionError: degree of `v` is not 2, or its neighbours are
            already adjacent (the result would not be simple)
    """
    if G.degree(v) != 2:
        raise PreconditionError(
            f"vertex {v!r} has degree {G.degree(v)}, a reduction needs degree 2")
    u, w = G.neighbors(v)
    if G.has_edge(u, w):
        raise PreconditionError(
            f"neighbours {u!r} and {w!r} of {v!r} are adjacent")
    edges = [edge for edge in G.edges if v not in edge] + [edge_key(u, w)]
    return Graph([x for x in G.vertices if x != v], edges, allow_isolated=True)


def subgraph(G: Graph, vs: Iterable[str], es: Iterable[Sequence[str]]) -> Graph:
    r"""The subgraph with vertex set `vs` and edge set `es`. The result may
    contain isolated vertices; call :meth:`Graph.validate` to reject them.

    Raises:
        InvalidArgumentError: a vertex or edge is not in `G`, or a chosen edge
            has an endpoint outside `vs`
    """
    vs = set(vs)
    missing = vs.difference(G.vertices)
    if missing:
        raise InvalidArgumentError(
            f"vertices not in the graph: {', '.join(sorted(missing))}")
    chosen = []
    for e in es:
        if len(e) != 2 or not G.has_edge(*e):
            raise InvalidArgumentError(f"{tuple(e)} is not an edge of the graph")
        if e[0] not in vs or e[1] not in vs:
            raise InvalidArgumentError(
                f"edge {e[0]}-{e[1]} has an endpoint outside the vertex selection")
        chosen.append(edge_key(*e))
    return Graph([v for v in G.vertices if v in vs], chosen, allow_isolated=True)


@TRANSFORMS.register(name="line")
def _line(G: Graph, edge=None, vertex=None):
    return line_graph(G)


@TRANSFORMS.register(name="total")
def _total(G: Graph, edge=None, vertex=None):
    return total_graph(G)


@TRANSFORMS.register(name="subdivide")
def _subdivide(G: Graph, edge=None, vertex=None):
    if edge is None:
        raise InvalidArgumentError("subdivide needs an edge")
    H, w = subdivide(G, edge)
    origin: Dict[str, Element] = {x: x for x in G.vertices}
    origin[w] = edge_key(*edge)
    return H, ElementCorrespondence(origin)


@TRANSFORMS.register(name="contract")
def _contract(G: Graph, edge=None, vertex=None):
    if edge is None:
        raise InvalidArgumentError("contract needs an edge")
    H, w = contract(G, edge)
    origin: Dict[str, Element] = {x: x for x in H.vertices if x != w}
    origin[w] = edge_key(*edge)
    return H, ElementCorrespondence(origin)


@TRANSFORMS.register(name="reduce")
def _reduce(G: Graph, edge=None, vertex=None):
    if vertex is None:
        raise InvalidArgumentError("reduce needs a vertex")
    H = topological_reduction(G, vertex)
    return H, ElementCorrespondence.identity(H)


def apply_transform(kind: str,
                    G: Graph,
                    edge: Optional[Sequence[str]] = None,
                    vertex: Optional[str] = None
                    ) -> Tuple[Graph, ElementCorrespondence]:
    r"""Run a registered transform (line/total/subdivide/contract/reduce)."""
    try:
        fn = TRANSFORMS.get(kind)
    except KeyError:
        raise InvalidArgumentError(
            f"unknown transform {kind!r}; expected one of "
            f"{', '.join(name for name, _ in TRANSFORMS)}")
    logger.debug(f"applying transform {kind} (edge={edge}, vertex={vertex})")
    return fn(G, edge=edge, vertex=vertex)
