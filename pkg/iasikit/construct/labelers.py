# Copyright (c) iasikit authors. All rights reserved.
import logging
from itertools import combinations
from math import gcd
from typing import Dict, Mapping, Optional, Sequence, Union

from sympy import prime

from ..core import (LABELERS, ConstructionImpossibleError,
                    InvalidArgumentError)
from ..graph import Graph, color_classes, greedy_coloring, is_bipartite
from ..labeling import SetLabeling, verify_iasi
from ..sets import APSetDescriptor
from .params import ConstructionParams

logger = logging.getLogger(__name__)


def _labeling(descriptors: Mapping[str, APSetDescriptor]) -> SetLabeling:
    return SetLabeling({v: D.expand() for v, D in descriptors.items()},
                       check_injective=False)


def _shift_target(verdict) -> str:
    if verdict.kind == "vertex":
        return verdict.pair[1]
    first, later = verdict.pair
    fresh = [v for v in later if v not in first]
    return fresh[0] if fresh else later[1]


def _next_first_term(G: Graph, descriptors: Dict[str, APSetDescriptor],
                     v: str) -> int:
    r"""The smallest first term above the current one that gives `v` a label
    no other vertex has and edge labels whose minima no edge away from `v`
    uses. The minimum of f(u) + f(w) is the sum of the first terms."""
    D = descriptors[v]
    taken_firsts = {
        E.first
        for u, E in descriptors.items()
        if u != v and (E.difference, E.length) == (D.difference, D.length)
    }
    taken_minima = {
        descriptors[a].first + descriptors[b].first
        for a, b in G.edges if v not in (a, b)
    }
    neighbour_firsts = [descriptors[w].first for w in G.neighbors(v)]
    first = D.first + 1
    while first in taken_firsts or any(
            first + a in taken_minima for a in neighbour_firsts):
        first += 1
    return first


def _verify_and_repair(G: Graph,
                       descriptors: Dict[str, APSetDescriptor]) -> SetLabeling:
    r"""Move the first term of the later vertex of each collision until the
    labeling is an IASI. Only first terms change, so differences and sizes
    (and with them the edge kinds) are kept. A moved vertex takes no part in
    later collisions, so at most |V| moves are made."""
    budget = 2 * G.number_of_vertices()
    for _ in range(budget + 1):
        f = _labeling(descriptors)
        verdict = verify_iasi(G, f)
        if verdict.ok:
            return f
        v = _shift_target(verdict)
        D = descriptors[v]
        descriptors[v] = APSetDescriptor(_next_first_term(G, descriptors, v),
                                         D.difference, D.length)
        logger.debug(f"{verdict.message}; moving {v} to start at "
                     f"{descriptors[v].first}")
    raise RuntimeError(
        f"could not make the labeling injective after {budget} moves")


def construct_first_kind(G: Graph,
                         p: Optional[ConstructionParams] = None) -> SetLabeling:
    r"""A first-kind semi-arithmetic IASI of `G`.

    On a bipartite graph with parts (X, Y), the i-th X vertex gets the
    m-term AP-set with difference d starting at i * |Y| * d, and the j-th Y
    vertex the n-term AP-set with difference k * d starting at j * d. Every
    edge then has set-indexing number m * n.

    A non-bipartite graph only admits such a labeling when all labels have
    the same size; with m == n vertices are greedily coloured and colour c
    uses difference d * k**c.

    Raises:
        ConstructionImpossibleError: `G` is not bipartite and m != n

    Example:
        >>> f = construct_first_kind(Graph(edges=[("u", "v")]),
        ...                          ConstructionParams(m=3, n=3, d=1, k=4))
        >>> str(f["u"]), str(f["v"])
        ("{0,1,2}", "{0,4,8}")
    """
    p = p or ConstructionParams()
    k, d = p.multiplier, p.d
    parts = is_bipartite(G)
    descriptors: Dict[str, APSetDescriptor] = {}
    if parts is not None:
        for i, x in enumerate(parts.x):
            descriptors[x] = APSetDescriptor(i * len(parts.y) * d, d, p.m)
        for j, y in enumerate(parts.y):
            descriptors[y] = APSetDescriptor(j * d, k * d, p.n)
    elif p.m == p.n:
        color = greedy_coloring(G)
        for index, v in enumerate(G.vertices):
            descriptors[v] = APSetDescriptor(index * d, d * k**color[v], p.m)
    else:
        raise ConstructionImpossibleError(
            f"a first-kind labeling with m={p.m} != n={p.n} needs a bipartite "
            f"graph, and this one has an odd cycle")
    return _verify_and_repair(G, descriptors)


def construct_isoarithmetic(G: Graph,
                            d: int = 1,
                            sizes: Union[int, Mapping[str, int]] = 3
                            ) -> SetLabeling:
    r"""Label every vertex with an AP-set of difference `d`; vertex i (in
    graph order) starts at i. `sizes` is one size for all vertices or a
    per-vertex map."""
    if d < 1:
        raise InvalidArgumentError(f"`d` must be positive, got {d}")
    if isinstance(sizes, int):
        sizes = {v: sizes for v in G.vertices}
    descriptors = {}
    for index, v in enumerate(G.vertices):
        if v not in sizes:
            raise InvalidArgumentError(f"no size given for vertex {v!r}")
        if sizes[v] < 3:
            raise InvalidArgumentError(
                f"AP-set labels need at least three terms, {v!r} has {sizes[v]}")
        descriptors[v] = APSetDescriptor(index, d, sizes[v])
    return _verify_and_repair(G, descriptors)


def default_differences(count: int) -> list:
    r"""The first `count` primes."""
    return [int(prime(i)) for i in range(1, count + 1)]


def _check_differences(diffs: Sequence[int]):
    for q in diffs:
        if q < 2:
            raise InvalidArgumentError(
                f"second-kind differences must be at least 2, got {q}")
    for a, b in combinations(diffs, 2):
        if gcd(a, b) != 1:
            raise InvalidArgumentError(
                f"differences {a} and {b} are not coprime")


def construct_second_kind(G: Graph,
                          diffs: Optional[Sequence[int]] = None,
                          size: int = 3) -> SetLabeling:
    r"""A second-kind semi-arithmetic IASI from pairwise-coprime differences.

    Vertices are greedily coloured in graph order and colour c uses
    ``diffs[c]``; a vertex starts at its position within its colour class.
    Every edge is strong: two coprime differences p < q give distinct sums
    exactly when `size` is at most q.

    Raises:
        InvalidArgumentError: a difference below 2, two differences sharing
            a factor, or `size` above the larger difference of some edge
        ConstructionImpossibleError: the colouring needs more colours than
            differences were given
    """
    if size < 3:
        raise InvalidArgumentError(
            f"AP-set labels need at least three terms, got size {size}")
    color = greedy_coloring(G)
    classes = color_classes(color)
    if diffs is None:
        diffs = default_differences(len(classes))
    diffs = list(diffs)
    _check_differences(diffs)
    if len(classes) > len(diffs):
        raise ConstructionImpossibleError(
            f"greedy colouring needs {len(classes)} colours but only "
            f"{len(diffs)} differences were given")
    for u, v in G.edges:
        larger = max(diffs[color[u]], diffs[color[v]])
        if size > larger:
            raise InvalidArgumentError(
                f"size {size} exceeds {larger}, the larger difference on edge "
                f"{u}-{v}; the edge would not be strong")
    descriptors = {}
    for c, members in enumerate(classes):
        for position, v in enumerate(members):
            descriptors[v] = APSetDescriptor(position, diffs[c], size)
    descriptors = {v: descriptors[v] for v in G.vertices}
    return _verify_and_repair(G, descriptors)


@LABELERS.register(name="first")
def _first(graph: Graph, m: int = 3, n: int = 4, d: int = 1, k=None, **kwargs):
    return construct_first_kind(graph, ConstructionParams(m, n, d, k))


@LABELERS.register(name="iso")
def _iso(graph: Graph, d: int = 1, size: int = 3, **kwargs):
    return construct_isoarithmetic(graph, d, size)


@LABELERS.register(name="second")
def _second(graph: Graph, diffs=None, size: int = 3, **kwargs):
    return construct_second_kind(graph, diffs, size)
