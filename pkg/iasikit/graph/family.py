# Copyright (c) iasikit authors. All rights reserved.
from itertools import combinations
from typing import Iterator, Tuple

from ..core import InvalidArgumentError
from .simple import Graph


def _at_least(name: str, value: int, low: int):
    if value < low:
        raise InvalidArgumentError(f"`{name}` must be at least {low}, got {value}")


def path_graph(n: int) -> Graph:
    r"""Path on `n` vertices v0 - v1 - ... - v(n-1)."""
    _at_least("n", n, 2)
    return Graph(edges=[(f"v{i}", f"v{i + 1}") for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _at_least("n", n, 3)
    return Graph(edges=[(f"v{i}", f"v{(i + 1) % n}") for i in range(n)])


def star_graph(k: int) -> Graph:
    r"""K_{1,k}: centre x0 joined to leaves y0..y(k-1)."""
    _at_least("k", k, 1)
    return Graph(edges=[("x0", f"y{j}") for j in range(k)])


def complete_graph(n: int) -> Graph:
    _at_least("n", n, 2)
    return Graph([f"v{i}" for i in range(n)],
                 combinations([f"v{i}" for i in range(n)], 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    r"""K_{a,b} with parts x0..x(a-1) and y0..y(b-1)."""
    _at_least("a", a, 1)
    _at_least("b", b, 1)
    xs = [f"x{i}" for i in range(a)]
    ys = [f"y{j}" for j in range(b)]
    return Graph(xs + ys, [(x, y) for x in xs for y in ys])


def small_graph_family(max_vertices: int = 6,
                       bipartite_only: bool = True) -> Iterator[Tuple[str, Graph]]:
    r"""The fixed family graph audits run over, as (name, graph) pairs.

    Stars, paths, even cycles and complete bipartite graphs K_{a,b} (a <= b)
    with at most `max_vertices` vertices; odd cycles and complete graphs are
    appended when `bipartite_only` is False. Order is fixed.
    """
    _at_least("max_vertices", max_vertices, 2)
    for k in range(1, max_vertices):
        yield f"star_{k}", star_graph(k)
    for n in range(3, max_vertices + 1):
        yield f"path_{n}", path_graph(n)
    for n in range(4, max_vertices + 1, 2):
        yield f"cycle_{n}", cycle_graph(n)
    for a in range(2, max_vertices // 2 + 1):
        for b in range(a, max_vertices - a + 1):
            yield f"complete_bipartite_{a}_{b}", complete_bipartite_graph(a, b)
    if bipartite_only:
        return
    for n in range(3, max_vertices + 1, 2):
        yield f"cycle_{n}", cycle_graph(n)
    for n in range(4, max_vertices + 1):
        yield f"complete_{n}", complete_graph(n)
