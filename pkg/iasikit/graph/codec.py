# Copyright (c) iasikit authors. All rights reserved.
import re
from typing import List

from ..core import InvalidArgumentError, ParseError
from ..fileio import BaseFileHandler, lines_from_text, register_handler
from .simple import Edge, Graph, edge_key

_TOKENS = re.compile(r"\S+")


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    r"""Parse the edge-list format: one ``u v`` pair per line, ``#`` starts a
    comment, blank lines are skipped.

    Raises:
        ParseError: a line without exactly two tokens, a loop, a repeated
            edge, or no edges at all. Line and column are 1-based.
    """
    raw_lines = text.splitlines()
    seen = {}
    edges: List[Edge] = []
    for lineno, content in lines_from_text(text, comment="#"):
        raw = raw_lines[lineno - 1]
        tokens = list(_TOKENS.finditer(raw.split("#", 1)[0]))
        if len(tokens) != 2:
            column = tokens[2].start() + 1 if len(tokens) > 2 else len(raw) + 1
            raise ParseError(f"expected two vertex ids, found {len(tokens)}",
                             line=lineno,
                             column=column,
                             source=source)
        u, v = tokens[0].group(), tokens[1].group()
        if u == v:
            raise ParseError(f"loop at vertex {u!r}",
                             line=lineno,
                             column=tokens[1].start() + 1,
                             source=source)
        key = edge_key(u, v)
        if key in seen:
            raise ParseError(f"edge {u}-{v} repeats line {seen[key]}",
                             line=lineno,
                             column=tokens[0].start() + 1,
                             source=source)
        seen[key] = lineno
        edges.append((u, v))
    if not edges:
        raise ParseError("no edges found", line=1, column=1, source=source)
    try:
        return Graph(edges=edges)
    except InvalidArgumentError as e:
        raise ParseError(e.message, source=source)


def dump_edge_list(G: Graph) -> str:
    r"""Render `G` in the edge-list format, edges in canonical sorted order.
    Isolated vertices cannot be expressed and are rejected."""
    G.validate()
    return "".join(f"{u} {v}\n" for u, v in G.canonical_edges())


@register_handler("edges")
class EdgeListHandler(BaseFileHandler):
    def loads(self, text, source="<string>"):
        return parse_edge_list(text, source=source)

    def dumps(self, obj, **kwargs):
        return dump_edge_list(obj)
