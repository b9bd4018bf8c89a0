# Copyright (c) iasikit authors. All rights reserved.
from typing import Any, Dict, Iterator, List, NamedTuple, Optional

import networkx as nx

from ..construct import (ConstructionParams, construct_first_kind,
                         construct_second_kind)
from ..core import AUDITS, ConstructionImpossibleError
from ..graph import Graph, subgraph
from ..labeling import classify, is_semi_arithmetic_edge, transport_labeling
from ..sets import APSetDescriptor, recognize_ap, sumset
from .oracle import oracle_is_ap, oracle_sums, oracle_sumset_cardinality


class GraphInstance(NamedTuple):
    p: str
    q: Dict[str, Any]
    expected: Any
    observed: Any
    # data :meth:`GraphAudit.reverify` recomputes `observed` from
    witness: Any = None


def _descriptor(values: List[int]) -> Optional[APSetDescriptor]:
    r"""Pure-python AP recognition of a label given as a list."""
    if not oracle_is_ap(values, min_length=1):
        return None
    values = sorted(values)
    gap = values[1] - values[0] if len(values) > 1 else 1
    return APSetDescriptor(values[0], gap, len(values))


class GraphAudit:
    r"""Base class of audits over the fixed small-graph family.

    :meth:`instances` yields one :class:`GraphInstance` per checked case;
    mismatches are re-derived by :meth:`reverify` from the instance
    witness before they are reported.
    """
    description = ""
    bipartite_only = True

    def instances(self, name: str, G: Graph,
                  params: ConstructionParams) -> Iterator[GraphInstance]:
        raise NotImplementedError

    def reverify(self, witness: Any) -> Any:
        raise NotImplementedError


def _params_dict(p: ConstructionParams) -> Dict[str, Any]:
    return dict(m=p.m, n=p.n, d=p.d, k=p.multiplier)


def _bipartite_by_cardinality(edges, sizes: Dict[str, int], m: int,
                              n: int) -> bool:
    r"""With m != n, the vertices of cardinality m and those of cardinality n
    split every edge; with m == n every vertex has cardinality m."""
    if m == n:
        return all(size == m for size in sizes.values())
    return all({sizes[u], sizes[v]} == {m, n} for u, v in edges)


@AUDITS.register(name="first_kind_uniform")
class FirstKindUniform(GraphAudit):
    r"""Constructed first-kind labelings of bipartite graphs are mn-uniform
    and their vertices split into parts by set-indexing number; graphs with
    an odd cycle admit none when m != n."""
    description = "first-kind labelings: mn-uniform iff bipartite or m == n"
    bipartite_only = False

    def instances(self, name, G, params):
        q = _params_dict(params)
        m, n = params.m, params.n
        try:
            f = construct_first_kind(G, params)
        except ConstructionImpossibleError:
            yield GraphInstance(name, q, "impossible" if m != n else "constructed",
                                "impossible", ("construction", G, m, n))
            return
        if not nx.is_bipartite(G.nx) and m != n:
            yield GraphInstance(name, q, "impossible", "constructed",
                                ("construction", G, m, n))
            return
        report = classify(G, f)
        observed = dict(
            semi_arithmetic_first_kind=report.semi_arithmetic_first_kind,
            edge_uniform_k=report.edge_uniform_k,
            bipartition_by_cardinality=_bipartite_by_cardinality(
                G.edges, {v: len(f[v]) for v in G.vertices}, m, n))
        expected = dict(semi_arithmetic_first_kind=True,
                        edge_uniform_k=m * n,
                        bipartition_by_cardinality=True)
        witness = ("labeling", f.to_dict(), G.edges, m, n)
        yield GraphInstance(name, q, expected, observed, witness)

    def reverify(self, witness):
        if witness[0] == "construction":
            _, G, m, n = witness
            return "impossible" if not nx.is_bipartite(G.nx) and m != n \
                else "constructed"
        _, labels, edges, m, n = witness
        D = {v: _descriptor(values) for v, values in labels.items()}
        indices = {oracle_sumset_cardinality(D[u], D[v]) for u, v in edges}
        first_kind = all(
            D[v] is not None and D[v].length >= 3 for v in labels) and all(
                is_semi_arithmetic_edge(D[u], D[v]) for u, v in edges)
        return dict(semi_arithmetic_first_kind=first_kind,
                    edge_uniform_k=indices.pop() if len(indices) == 1 else None,
                    bipartition_by_cardinality=_bipartite_by_cardinality(
                        edges, {v: len(values) for v, values in labels.items()},
                        m, n))


def _first_kind_after(labels: Dict[str, List[int]], edges) -> bool:
    D = {v: _descriptor(values) for v, values in labels.items()}
    if any(P is None or P.length < 3 for P in D.values()):
        return False
    return all(is_semi_arithmetic_edge(D[u], D[v]) for u, v in edges)


@AUDITS.register(name="subgraph_heredity")
class SubgraphHeredity(GraphAudit):
    r"""Restricting a first-kind labeling to a subgraph keeps it first-kind.
    Subgraphs checked: G - v for every vertex v, isolated vertices dropped."""
    description = "subgraphs of first-kind labeled graphs stay first-kind"

    def instances(self, name, G, params):
        f = construct_first_kind(G, params)
        q = _params_dict(params)
        for v in G.vertices:
            es = [e for e in G.edges if v not in e]
            if not es:
                continue
            vs = {x for e in es for x in e}
            H = subgraph(G, vs, es).validate()
            g = f.restrict(H.vertices)
            observed = classify(H, g).semi_arithmetic_first_kind
            yield GraphInstance(f"{name}-{v}", q, True, observed,
                                (g.to_dict(), H.edges))

    def reverify(self, witness):
        labels, edges = witness
        return _first_kind_after(labels, edges)


class _TransportAudit(GraphAudit):
    r"""Carry a first-kind labeling through `transform` and expect at least
    one derived vertex label that is not an AP-set."""
    transform = ""
    per_edge = False

    def instances(self, name, G, params):
        f = construct_first_kind(G, params)
        q = _params_dict(params)
        targets = G.edges if self.per_edge else [None]
        for e in targets:
            result = transport_labeling(self.transform, G, f, edge=e)
            labels = [label.to_list() for label in result.labeling.values()]
            observed = any(
                recognize_ap(label) is None
                for label in result.labeling.values())
            p = name if e is None else f"{name}/{e[0]}-{e[1]}"
            yield GraphInstance(p, q, True, observed, labels)

    def reverify(self, witness):
        return any(not oracle_is_ap(values, min_length=1) for values in witness)


@AUDITS.register(name="line_graph_labels")
class LineGraphLabels(_TransportAudit):
    description = "line graphs of first-kind labeled graphs get non-AP labels"
    transform = "line"


@AUDITS.register(name="total_graph_labels")
class TotalGraphLabels(_TransportAudit):
    description = "total graphs of first-kind labeled graphs get non-AP labels"
    transform = "total"


@AUDITS.register(name="contraction_labels")
class ContractionLabels(_TransportAudit):
    description = "contracting any edge yields a non-AP vertex label"
    transform = "contract"
    per_edge = True


@AUDITS.register(name="subdivision_labels")
class SubdivisionLabels(_TransportAudit):
    description = "subdividing any edge yields a non-AP vertex label"
    transform = "subdivide"
    per_edge = True


@AUDITS.register(name="reduction_criterion")
class ReductionCriterion(GraphAudit):
    r"""At every degree-2 vertex v with non-adjacent neighbours u, w, the new
    edge uw of the reduced graph predicted to have a non-AP label exactly
    when f(u), f(w) are in first-kind relation. Runs over first-kind and
    second-kind constructions; this gathers evidence, second-kind pairs are
    expected to disagree."""
    description = "reduction edge uw is non-AP iff (u, w) is first-kind"
    bipartite_only = False

    def _labelings(self, G: Graph, params: ConstructionParams):
        try:
            yield dict(labeler="first", **_params_dict(params)), \
                construct_first_kind(G, params)
        except ConstructionImpossibleError:
            pass
        yield dict(labeler="second"), construct_second_kind(G)

    def instances(self, name, G, params):
        for q, f in self._labelings(G, params):
            for v in G.vertices:
                if G.degree(v) != 2:
                    continue
                u, w = G.neighbors(v)
                if G.has_edge(u, w):
                    continue
                P, Q = recognize_ap(f[u]), recognize_ap(f[w])
                expected = is_semi_arithmetic_edge(P, Q)
                observed = recognize_ap(sumset(f[u], f[w])) is None
                yield GraphInstance(f"{name}@{v}", q, expected, observed, (P, Q))

    def reverify(self, witness):
        P, Q = witness
        return not oracle_is_ap(oracle_sums(P, Q), min_length=1)
