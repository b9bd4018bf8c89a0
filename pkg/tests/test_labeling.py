# Copyright (c) iasikit authors. All rights reserved.
import json
import os.path as osp

import pytest

from iasikit import (ARITHMETIC_MULTIPLE, EQUAL_DIFFERENCE, FIRST_KIND,
                     SECOND_KIND_COMMON_FACTOR, SECOND_KIND_COPRIME,
                     APSetDescriptor, ClassificationReport, EdgeKind, Graph,
                     IasiViolationError, IntegerSet, InvalidArgumentError,
                     LabelCollisionError, MissingLabelError, ParseError,
                     PreconditionError, SetLabeling, classify, dump_labeling,
                     edge_id, edge_kind, induced_edge_label, is_ap_set,
                     is_semi_arithmetic_edge, is_strong_edge,
                     labeling_from_json, load, load_labeling,
                     recognize_ap, set_indexing_number, transport_labeling,
                     verify_iasi)

data_path = osp.join(osp.dirname(__file__), "data")

K2 = Graph(edges=[("u", "v")])
P3 = Graph(edges=[("u", "v"), ("v", "w")])


def D(*values):
    return APSetDescriptor(*values)


def test_set_labeling():
    f = SetLabeling({"u": [0, 1, 2], "v": IntegerSet([0, 4, 8])})
    assert str(f["v"]) == "{0,4,8}"
    assert len(f) == 2 and list(f) == ["u", "v"]
    assert "u" in f and "w" not in f
    assert f.get("w") is None
    assert f.cardinality("u") == 3
    assert f.to_dict() == {"u": [0, 1, 2], "v": [0, 4, 8]}
    assert SetLabeling.from_dict(f.to_dict()) == f
    assert f.restrict(["v"]).to_dict() == {"v": [0, 4, 8]}
    with pytest.raises(MissingLabelError):
        f["w"]

    with pytest.raises(LabelCollisionError) as e:
        SetLabeling({"u": [1, 2, 3], "v": [0, 4], "w": [3, 2, 1]})
    assert e.value.pair == ("u", "w")
    shared = SetLabeling({"u": [1, 2, 3], "w": [1, 2, 3]},
                         check_injective=False)
    assert shared["u"] == shared["w"]

    with pytest.raises(InvalidArgumentError):
        SetLabeling({"": [0]})
    with pytest.raises(InvalidArgumentError):
        SetLabeling.from_dict([["u", [0]]])


def test_labeling_json(tmp_path):
    f = labeling_from_json('{"u": [0, 1, 2], "v": [0, 4, 8]}')
    assert f.to_dict() == {"u": [0, 1, 2], "v": [0, 4, 8]}
    assert json.loads(dump_labeling(f)) == f.to_dict()

    path = str(tmp_path / "f.json")
    dump_labeling(f, path)
    assert load_labeling(path) == f
    assert load(path) == f.to_dict()

    with pytest.raises(ParseError) as e:
        labeling_from_json('{"u": [0, 1,\n  ]}', source="f.json")
    assert e.value.line == 2
    for text in ('[1, 2]', '{"u": []}', '{"u": [-1]}', '{"u": [true]}',
                 '{"u": "0,1"}'):
        with pytest.raises(ParseError):
            labeling_from_json(text)
    with pytest.raises(LabelCollisionError):
        labeling_from_json('{"u": [1, 2], "v": [2, 1]}')

    # duplicate labels load; verify_iasi reports them
    f = load_labeling(osp.join(data_path, "duplicate.json"))
    assert f["u"] == f["w"]
    with pytest.raises(FileNotFoundError):
        load_labeling(osp.join(data_path, "missing.json"))


def test_induced_edge_label():
    f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8], "w": [1, 3, 5],
                     "x": [0, 2, 4], "a": [0], "b": [1]})
    assert induced_edge_label(f, ("u", "v")) == IntegerSet(
        [0, 1, 2, 4, 5, 6, 8, 9, 10])
    assert induced_edge_label(f, ("a", "b")) == IntegerSet([1])
    assert induced_edge_label(f, ("x", "w")) == IntegerSet([1, 3, 5, 7, 9])
    with pytest.raises(MissingLabelError):
        induced_edge_label(f, ("u", "z"))

    assert set_indexing_number(f, "v") == 3
    assert set_indexing_number(f, ("u", "v")) == 9
    assert set_indexing_number(f, ("x", "w")) == 5


def test_verify_iasi():
    verdict = verify_iasi(K2, SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8]}))
    assert verdict.ok and bool(verdict)
    assert verdict.to_dict() == dict(ok=True, kind=None, pair=None,
                                     message="ok")

    shared = SetLabeling({"u": [1, 2, 3], "v": [1, 2, 3]},
                         check_injective=False)
    verdict = verify_iasi(K2, shared)
    assert not verdict
    assert (verdict.kind, verdict.pair) == ("vertex", ("u", "v"))

    f = SetLabeling({"u": [0, 1], "v": [5], "w": [0, 1]}, check_injective=False)
    verdict = verify_iasi(P3, f)
    assert (verdict.kind, verdict.pair) == ("vertex", ("u", "w"))

    # {0} + {1, 2} == {1} + {0, 1}
    star = Graph(edges=[("c", "a"), ("c", "b"), ("d", "e")])
    f = SetLabeling({"c": [0], "a": [1, 2], "b": [5], "d": [1], "e": [0, 1]})
    verdict = verify_iasi(star, f)
    assert verdict.kind == "edge"
    assert verdict.pair == (("a", "c"), ("d", "e"))
    assert verdict.to_dict()["pair"] == [["a", "c"], ["d", "e"]]

    with pytest.raises(MissingLabelError):
        verify_iasi(P3, SetLabeling({"u": [0], "v": [1]}))
    with pytest.raises(InvalidArgumentError):
        verify_iasi(K2, SetLabeling({"u": [0], "v": [1], "z": [2]}))


@pytest.mark.parametrize("P, Q, relation, k", [
    (D(0, 1, 3), D(0, 2, 3), ARITHMETIC_MULTIPLE, 2),
    (D(0, 1, 3), D(0, 3, 3), ARITHMETIC_MULTIPLE, 3),
    (D(0, 1, 3), D(0, 4, 3), FIRST_KIND, 4),
    (D(0, 4, 3), D(0, 1, 3), FIRST_KIND, 4),
    (D(0, 4, 3), D(0, 6, 5), SECOND_KIND_COMMON_FACTOR, None),
    (D(0, 2, 3), D(1, 3, 3), SECOND_KIND_COPRIME, None),
    (D(0, 2, 3), D(1, 2, 5), EQUAL_DIFFERENCE, 1),
])
def test_edge_kind(P, Q, relation, k):
    kind = edge_kind(P, Q)
    assert (kind.relation, kind.k) == (relation, k)
    assert kind.d_small == min(P.difference, Q.difference)
    assert kind.d_large == max(P.difference, Q.difference)
    assert EdgeKind.from_dict(kind.to_dict()) == kind
    assert is_semi_arithmetic_edge(P, Q) == (relation == FIRST_KIND)


def test_edge_kind_invalid():
    with pytest.raises(PreconditionError):
        edge_kind(D(0, 1, 2), D(0, 4, 3))
    with pytest.raises(InvalidArgumentError):
        EdgeKind("third-kind", None, 1, 2)
    # the multiplier is compared with the smaller-difference set
    assert edge_kind(D(0, 1, 5), D(0, 4, 3)).relation == ARITHMETIC_MULTIPLE


def test_is_strong_edge():
    assert is_strong_edge(IntegerSet([0, 1, 2]), IntegerSet([0, 4, 8]))
    assert not is_strong_edge(IntegerSet([0, 2, 4]), IntegerSet([1, 3, 5]))
    assert is_strong_edge(IntegerSet([0]), IntegerSet([3, 9, 11]))


def test_classify_arithmetic():
    report = classify(K2, SetLabeling({"u": [1, 2, 3], "v": [1, 3, 5]}))
    assert report.vertex_arithmetic and report.edge_arithmetic
    assert report.arithmetic and report.biarithmetic
    assert not report.isoarithmetic
    assert not report.strong
    assert report.edge_uniform_k == 7
    assert report.vertex_uniform_l == 3
    edge = report.per_edge[edge_id("v", "u")]
    assert edge.kind.relation == ARITHMETIC_MULTIPLE
    assert edge.set_indexing_number == 7
    assert edge.ap and not edge.strong

    report = classify(P3, SetLabeling({"u": [0, 1, 2], "v": [1, 2, 3],
                                       "w": [2, 3, 4, 5]}))
    assert report.isoarithmetic and report.arithmetic
    assert not report.biarithmetic
    assert report.edge_uniform_k is None
    assert report.vertex_uniform_l is None


def test_classify_semi_arithmetic():
    report = classify(K2, SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8]}))
    assert report.semi_arithmetic and report.semi_arithmetic_first_kind
    assert not report.semi_arithmetic_second_kind
    assert report.strong and report.strongly_uniform
    assert report.edge_uniform_k == 9
    assert not report.edge_arithmetic
    assert not report.per_edge["u,v"].ap

    report = classify(K2, SetLabeling({"u": [0, 2, 4], "v": [0, 3, 6]}))
    assert report.per_edge["u,v"].kind.relation == SECOND_KIND_COPRIME
    assert report.semi_arithmetic_second_kind and report.strong

    # mixed edge kinds satisfy neither kind globally
    f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8], "w": [1, 7, 13]})
    report = classify(P3, f)
    assert report.vertex_arithmetic
    assert not report.semi_arithmetic_first_kind
    assert not report.semi_arithmetic_second_kind
    assert report.per_edge["v,w"].kind.relation == SECOND_KIND_COMMON_FACTOR


def test_classify_non_arithmetic():
    report = classify(K2, SetLabeling({"u": [0, 1], "v": [0, 5, 6]}))
    assert not report.vertex_arithmetic
    assert report.per_edge["u,v"].kind is None
    assert not report.semi_arithmetic and not report.arithmetic

    with pytest.raises(IasiViolationError) as e:
        classify(P3, SetLabeling({"u": [1, 2, 3], "v": [0], "w": [1, 2, 3]},
                                 check_injective=False))
    assert e.value.verdict.pair == ("u", "w")


def test_report_round_trip():
    report = classify(P3, SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8],
                                       "w": [3, 4, 5]}))
    data = json.loads(json.dumps(report.to_dict()))
    assert ClassificationReport.from_dict(data) == report
    assert set(report.flags()) == set(data) - {"per_edge"}
    assert data["per_edge"]["u,v"]["kind"]["relation"] == FIRST_KIND
    # pure: same inputs, same report
    assert classify(P3, SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8],
                                     "w": [3, 4, 5]})) == report


def test_set_indexing_number_is_compatibility_index():
    f = load_labeling(osp.join(data_path, "k23_first.json"))
    G = load(osp.join(data_path, "k23.edges"))
    report = classify(G, f)
    assert report.semi_arithmetic_first_kind
    assert report.edge_uniform_k == 12
    for u, v in G.edges:
        assert set_indexing_number(f, (u, v)) == \
            report.per_edge[edge_id(u, v)].set_indexing_number


def test_transport_labeling():
    f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8]})
    H, g, corr, verdict = transport_labeling("contract", K2, f, edge=("u", "v"))
    assert H.vertices == ("c:u+v", )
    assert g["c:u+v"] == IntegerSet([0, 1, 2, 4, 5, 6, 8, 9, 10])
    assert verdict.ok
    assert recognize_ap(g["c:u+v"]) is None

    f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8], "w": [3, 4, 5]})
    result = transport_labeling("subdivide", P3, f, edge=("u", "v"))
    assert result.labeling["s:1"] == induced_edge_label(f, ("u", "v"))
    assert result.labeling["u"] == f["u"]
    assert result.correspondence.origin("s:1") == ("u", "v")

    result = transport_labeling("reduce", P3, f, vertex="v")
    assert result.graph.canonical_edges() == [("u", "w")]
    assert result.labeling.to_dict() == {"u": [0, 1, 2], "w": [3, 4, 5]}
    assert is_ap_set(induced_edge_label(result.labeling, ("u", "w")), 3)

    result = transport_labeling("line", P3, f)
    assert result.labeling["e:u-v"] == induced_edge_label(f, ("u", "v"))
    result = transport_labeling("total", P3, f)
    assert result.labeling["w"] == f["w"]
    assert result.labeling["e:v-w"] == induced_edge_label(f, ("v", "w"))

    with pytest.raises(IasiViolationError):
        transport_labeling("line", P3,
                           SetLabeling({"u": [1], "v": [2], "w": [1]},
                                       check_injective=False))


def test_transport_reports_collisions():
    # singleton labels: f+(uv) = {1} = f(v)
    G = Graph(edges=[("u", "v"), ("v", "w"), ("w", "x")])
    f = SetLabeling({"u": [0], "v": [1], "w": [3], "x": [2]})
    assert verify_iasi(G, f).ok
    result = transport_labeling("line", G, f)
    assert result.verdict.ok
    result = transport_labeling("total", G, f)
    assert not result.verdict.ok
    assert result.verdict.kind == "vertex"
