# Copyright (c) iasikit authors. All rights reserved.
from collections import deque
from typing import Dict, List, NamedTuple, Optional, Tuple

from .simple import Graph


class Bipartition(NamedTuple):
    x: Tuple[str, ...]
    y: Tuple[str, ...]


def two_coloring(G: Graph) -> Optional[Dict[str, int]]:
    r"""Breadth-first 2-colouring, or None if `G` has an odd cycle.

    Each component starts from its first vertex in graph order, which gets
    colour 0.
    """
    color: Dict[str, int] = {}
    for root in G.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(G: Graph) -> Optional[Bipartition]:
    r"""Return a bipartition (X, Y) in graph vertex order, or None.

    Example:
        >>> is_bipartite(cycle_graph(4))
        Bipartition(x=("v0", "v2"), y=("v1", "v3"))
    """
    color = two_coloring(G)
    if color is None:
        return None
    return Bipartition(tuple(v for v in G.vertices if color[v] == 0),
                       tuple(v for v in G.vertices if color[v] == 1))


def greedy_coloring(G: Graph) -> Dict[str, int]:
    r"""Give each vertex, in graph order, the smallest colour not used by an
    already coloured neighbour."""
    color: Dict[str, int] = {}
    for v in G.vertices:
        taken = {color[w] for w in G.neighbors(v) if w in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return color


def color_classes(color: Dict[str, int]) -> List[List[str]]:
    classes: List[List[str]] = [[] for _ in range(max(color.values(), default=-1) + 1)]
    for v, c in color.items():
        classes[c].append(v)
    return classes
