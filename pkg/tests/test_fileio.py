# Copyright (c) iasikit authors. All rights reserved.
import os
import os.path as osp
import tempfile

import pytest

import iasikit

data_path = osp.join(osp.dirname(__file__), "data")


def _test_handler(file_format, test_obj, str_checker, mode="r+"):
    # dump to a string
    dump_str = iasikit.dump(test_obj, file_format=file_format)
    str_checker(dump_str)

    # load/dump with filenames
    tmp_filename = osp.join(tempfile.gettempdir(), "iasikit_test_dump")
    iasikit.dump(test_obj, tmp_filename, file_format=file_format)
    assert osp.isfile(tmp_filename)
    load_obj = iasikit.load(tmp_filename, file_format=file_format)
    assert load_obj == test_obj
    os.remove(tmp_filename)

    # load/dump with a file-like object
    with tempfile.NamedTemporaryFile(mode, delete=False) as f:
        tmp_filename = f.name
        iasikit.dump(test_obj, f, file_format=file_format)
    assert osp.isfile(tmp_filename)
    with open(tmp_filename, mode) as f:
        load_obj = iasikit.load(f, file_format=file_format)
    assert load_obj == test_obj
    os.remove(tmp_filename)

    # automatically inference the file format from the given filename
    tmp_filename = osp.join(tempfile.gettempdir(),
                            "iasikit_test_dump." + file_format)
    iasikit.dump(test_obj, tmp_filename)
    assert osp.isfile(tmp_filename)
    load_obj = iasikit.load(tmp_filename)
    assert load_obj == test_obj
    os.remove(tmp_filename)


obj_for_test = {"u": [0, 1, 2], "v": [0, 4, 8]}


def test_json():
    def json_checker(dump_str):
        assert dump_str == '{"u": [0, 1, 2], "v": [0, 4, 8]}'

    _test_handler("json", obj_for_test, json_checker)


def test_yaml():
    def yaml_checker(dump_str):
        assert dump_str in [
            "u: [0, 1, 2]\nv: [0, 4, 8]\n",
            "u:\n- 0\n- 1\n- 2\nv:\n- 0\n- 4\n- 8\n",
        ]

    _test_handler("yaml", obj_for_test, yaml_checker)


def test_edges():
    G = iasikit.cycle_graph(4)

    def edges_checker(dump_str):
        assert dump_str == "v0 v1\nv0 v3\nv1 v2\nv2 v3\n"

    _test_handler("edges", G, edges_checker)

    G = iasikit.load(osp.join(data_path, "k23.edges"))
    assert G.vertices == ("x0", "y0", "y1", "y2", "x1")
    assert G.number_of_edges() == 6


def test_exception():
    with pytest.raises(ValueError):
        iasikit.dump(obj_for_test)

    with pytest.raises(TypeError):
        iasikit.dump(obj_for_test, "tmp.txt")

    with pytest.raises(TypeError):
        iasikit.load(osp.join(data_path, "k23.unknown"))


def test_register_handler():
    @iasikit.register_handler("txt")
    class TxtHandler(iasikit.BaseFileHandler):
        def loads(self, text, source="<string>"):
            return text

        def dumps(self, obj, **kwargs):
            return str(obj)

    tmp_filename = osp.join(tempfile.gettempdir(), "iasikit_test.txt")
    iasikit.dump("{0,4,8}", tmp_filename)
    assert iasikit.load(tmp_filename) == "{0,4,8}"
    os.remove(tmp_filename)

    with pytest.raises(TypeError):
        iasikit.register_handler(1)(TxtHandler)


def test_list_from_file():
    lines = iasikit.list_from_file(osp.join(data_path, "k23.edges"))
    assert lines[0] == (2, "x0 y0")
    assert len(lines) == 6

    assert iasikit.lines_from_text("a b # note\n\n  c d\n") == [(1, "a b"),
                                                               (3, "c d")]
    assert iasikit.lines_from_text("a\n\n", skip_blank=False) == [(1, "a"),
                                                                  (2, "")]
