# Copyright (c) iasikit authors. All rights reserved.
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from iasikit import (APSetDescriptor, EQUAL_DIFFERENCE, IntegerSet,
                     SearchBounds, ap_sumset_cardinality,
                     compatibility_decomposition, edge_kind,
                     enumerate_ap_pairs, maximal_class_size,
                     oracle_maximal_class, oracle_sumset_cardinality,
                     recognize_ap, sumset)

small_sets = st.sets(st.integers(min_value=0, max_value=12),
                     min_size=1,
                     max_size=5).map(IntegerSet)

descriptors = st.builds(APSetDescriptor,
                        first=st.integers(min_value=0, max_value=20),
                        difference=st.integers(min_value=1, max_value=9),
                        length=st.integers(min_value=1, max_value=7))


@given(small_sets, small_sets)
def test_sumset_bounds(A, B):
    S = sumset(A, B)
    assert S == sumset(B, A)
    assert len(A) + len(B) - 1 <= len(S) <= len(A) * len(B)
    assert S.min == A.min + B.min
    assert S.max == A.max + B.max


@given(small_sets, small_sets)
def test_decomposition_partitions_pairs(A, B):
    dec = compatibility_decomposition(A, B)
    assert sum(dec.class_sizes().values()) == len(A) * len(B)
    assert dec.index == len(sumset(A, B))
    for k, pairs in dec.classes.items():
        assert all(a + b == k for a, b in pairs)
    assert 1 <= maximal_class_size(A, B) <= min(len(A), len(B))


@given(descriptors, descriptors)
def test_ap_cardinality_agrees_with_oracle(P, Q):
    assert ap_sumset_cardinality(P, Q) == oracle_sumset_cardinality(P, Q)


@given(descriptors)
def test_recognize_expand(P):
    D = recognize_ap(P.expand())
    if P.length == 1:
        assert D == APSetDescriptor(P.first, 1, 1)
    else:
        assert D == P


@settings(deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=12), min_size=1,
                max_size=5))
def test_integer_set_normal_form(values):
    A = IntegerSet(values)
    assert list(A) == sorted(set(values))
    assert IntegerSet(reversed(values)) == A


def test_maximal_class_bound_sample():
    rng = np.random.default_rng(2024)
    for _ in range(10**5):
        sizes = rng.integers(1, 6, size=2)
        A = IntegerSet(rng.choice(13, size=sizes[0], replace=False).tolist())
        B = IntegerSet(rng.choice(13, size=sizes[1], replace=False).tolist())
        assert maximal_class_size(A, B) <= min(len(A), len(B))


def test_maximal_class_bound_attained_on_equal_differences():
    for P, Q in enumerate_ap_pairs(SearchBounds()):
        size, _ = oracle_maximal_class(P, Q)
        assert size <= min(P.length, Q.length)
        if edge_kind(P, Q).relation == EQUAL_DIFFERENCE:
            assert size == min(P.length, Q.length)
            assert maximal_class_size(P.expand(), Q.expand()) == size
