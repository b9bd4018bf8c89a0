# Copyright (c) iasikit authors. All rights reserved.
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..core import InvalidArgumentError, NotFoundError

Edge = Tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    r"""Canonical (sorted) endpoint order of an undirected edge."""
    return (u, v) if u <= v else (v, u)


def _check_vertex_id(v) -> str:
    if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
        raise InvalidArgumentError(
            f"vertex ids must be non-empty strings without whitespace, got {v!r}"
        )
    return v


class Graph:
    r"""A simple, finite, undirected graph with stable string vertex ids.

    The graph is immutable: it wraps a frozen :class:`networkx.Graph` and
    every transform returns a new instance. Vertex order is insertion order
    (explicit `vertices` first, then first appearance in `edges`) and is what
    makes bipartitions and constructions deterministic.

    Args:
        vertices (Iterable[str], optional): vertices to add before the edges.
        edges (Iterable[tuple[str, str]]): the edge list.
        allow_isolated (bool): skip the no-isolated-vertices check. Transforms
            use this for intermediate states (contracting K2 leaves one
            isolated vertex).

    Example:
        >>> G = Graph(edges=[("u", "v"), ("v", "w")])
        >>> G.vertices
        ("u", "v", "w")
        >>> G.degree("v")
        2
    """
    __slots__ = ("_nx", )

    def __init__(self,
                 vertices: Optional[Iterable[str]] = None,
                 edges: Iterable[Sequence[str]] = (),
                 allow_isolated: bool = False):
        g = nx.Graph()
        for v in vertices or ():
            g.add_node(_check_vertex_id(v))
        for edge in edges:
            if len(edge) != 2:
                raise InvalidArgumentError(f"an edge needs two endpoints, got {edge!r}")
            u, v = _check_vertex_id(edge[0]), _check_vertex_id(edge[1])
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u!r} is not allowed")
            if g.has_edge(u, v):
                raise InvalidArgumentError(f"parallel edge {u}-{v} is not allowed")
            g.add_edge(u, v)
        self._nx = nx.freeze(g)
        if not allow_isolated:
            self.validate()

    @classmethod
    def from_edges(cls,
                   edges: Iterable[Sequence[str]],
                   vertices: Optional[Iterable[str]] = None,
                   allow_isolated: bool = False) -> "Graph":
        return cls(vertices, edges, allow_isolated=allow_isolated)

    @classmethod
    def from_networkx(cls, g: nx.Graph, allow_isolated: bool = False) -> "Graph":
        return cls(g.nodes, g.edges, allow_isolated=allow_isolated)

    @property
    def nx(self) -> nx.Graph:
        r"""The underlying frozen networkx graph (read-only)."""
        return self._nx

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(self._nx.nodes)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in self._nx.edges)

    def number_of_vertices(self) -> int:
        return self._nx.number_of_nodes()

    def number_of_edges(self) -> int:
        return self._nx.number_of_edges()

    def has_vertex(self, v: str) -> bool:
        return v in self._nx

    def has_edge(self, u: str, v: str) -> bool:
        return self._nx.has_edge(u, v)

    def _require_vertex(self, v: str):
        if v not in self._nx:
            raise NotFoundError(f"vertex {v!r} is not in the graph")

    def require_edge(self, u: str, v: str) -> Edge:
        if not self._nx.has_edge(u, v):
            raise NotFoundError(f"edge {u}-{v} is not in the graph")
        return edge_key(u, v)

    def degree(self, v: str) -> int:
        self._require_vertex(v)
        return self._nx.degree[v]

    def neighbors(self, v: str) -> Tuple[str, ...]:
        self._require_vertex(v)
        return tuple(self._nx.neighbors(v))

    def isolated_vertices(self) -> List[str]:
        return [v for v in self._nx.nodes if self._nx.degree[v] == 0]

    def validate(self, allow_isolated: bool = False) -> "Graph":
        r"""Check the public invariants; returns self for chaining.

        Raises:
            InvalidArgumentError: isolated vertices while not allowed
        """
        if not allow_isolated:
            isolated = self.isolated_vertices()
            if isolated:
                raise InvalidArgumentError(
                    f"graph has isolated vertices: {', '.join(isolated)}")
        return self

    def canonical_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        r"""Rename vertices; ids missing from `mapping` are kept."""
        renamed = [mapping.get(v, v) for v in self.vertices]
        if len(set(renamed)) != len(renamed):
            raise InvalidArgumentError("relabel mapping is not injective")
        return Graph(renamed,
                     [(mapping.get(u, u), mapping.get(v, v))
                      for u, v in self.edges],
                     allow_isolated=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and \
            self.canonical_edges() == other.canonical_edges()

    __hash__ = None

    def __repr__(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.canonical_edges())
        return f"Graph(|V|={self.number_of_vertices()}, " \
               f"|E|={self.number_of_edges()}: {edges})"


def same_up_to_relabel(G: Graph, H: Graph, mapping: Dict[str, str]) -> bool:
    r"""Exact equality of `H` and `G` with its vertices renamed by `mapping`;
    no isomorphism search is attempted."""
    return G.relabel(mapping) == H
