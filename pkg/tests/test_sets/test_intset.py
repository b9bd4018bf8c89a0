# Copyright (c) iasikit authors. All rights reserved.
import numpy as np
import pytest

from iasikit import (ELEMENT_MAX, IntegerSet, InvalidArgumentError, ParseError,
                     parse_integer_set)


def test_normal_form():
    A = IntegerSet([8, 0, 4, 4])
    assert A.elements == (0, 4, 8)
    assert len(A) == 3
    assert list(A) == [0, 4, 8]
    assert 4 in A and 5 not in A
    assert (A.min, A.max) == (0, 8)
    assert str(A) == "{0,4,8}"
    assert repr(A) == "IntegerSet({0,4,8})"
    assert A == IntegerSet(range(0, 9, 4))
    assert hash(A) == hash(IntegerSet([4, 8, 0]))
    assert A.to_list() == [0, 4, 8]
    assert A.as_array().dtype == np.uint64
    # numpy integers are accepted
    assert IntegerSet(np.arange(3)).elements == (0, 1, 2)


def test_invalid():
    with pytest.raises(InvalidArgumentError):
        IntegerSet([])
    with pytest.raises(InvalidArgumentError):
        IntegerSet([-1, 2])
    with pytest.raises(InvalidArgumentError):
        IntegerSet([1.5])
    with pytest.raises(InvalidArgumentError):
        IntegerSet([ELEMENT_MAX + 1])
    assert IntegerSet([ELEMENT_MAX]).max == ELEMENT_MAX


def test_parse_integer_set():
    assert parse_integer_set("{0,4,8}") == IntegerSet([0, 4, 8])
    assert parse_integer_set("  { 8, 0 ,4 } ") == IntegerSet([0, 4, 8])
    assert parse_integer_set("{7}") == IntegerSet([7])

    with pytest.raises(ParseError) as e:
        parse_integer_set("0,4,8")
    assert (e.value.line, e.value.column) == (1, 1)

    with pytest.raises(ParseError) as e:
        parse_integer_set("{0,x,8}", source="--a")
    assert e.value.column == 4
    assert e.value.source == "--a"
    assert e.value.message.startswith("--a:1:4:")

    for text in ("{}", "{0,4,}", "{-1,2}"):
        with pytest.raises(ParseError):
            parse_integer_set(text)
