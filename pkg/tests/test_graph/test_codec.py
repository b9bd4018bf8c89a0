# Copyright (c) iasikit authors. All rights reserved.
import os.path as osp

import pytest

from iasikit import (Graph, InvalidArgumentError, ParseError, dump_edge_list,
                     load, parse_edge_list)

data_path = osp.join(osp.dirname(osp.dirname(__file__)), "data")


def test_parse_edge_list():
    G = parse_edge_list("# a path\nu v\n\n  v   w # second edge\n")
    assert G == Graph(edges=[("u", "v"), ("v", "w")])
    assert dump_edge_list(G) == "u v\nv w\n"
    assert parse_edge_list(dump_edge_list(G)) == G


@pytest.mark.parametrize("text, line, column", [
    ("u v\nv w x\n", 2, 5),
    ("u v\nw\n", 2, 2),
    ("u v\nw w\n", 2, 3),
    ("u v\nv u\n", 2, 1),
    ("# nothing\n\n", 1, 1),
])
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_edge_list(text, source="g.edges")
    assert (e.value.line, e.value.column) == (line, column)
    assert e.value.message.startswith(f"g.edges:{line}:{column}:")


def test_load_edge_file():
    G = load(osp.join(data_path, "k23.edges"))
    assert G.number_of_vertices() == 5
    with pytest.raises(ParseError) as e:
        load(osp.join(data_path, "bad.edges"))
    assert e.value.line == 2
    assert e.value.source.endswith("bad.edges")


def test_dump_rejects_isolated():
    with pytest.raises(InvalidArgumentError):
        dump_edge_list(Graph(["x"], [("u", "v")], allow_isolated=True))
