# Copyright (c) iasikit authors. All rights reserved.
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core import InvalidArgumentError
from .compat import sumset
from .intset import ELEMENT_MAX, IntegerSet


@dataclass(frozen=True, order=True)
class APSetDescriptor:
    r"""Canonical form of an AP-set: ``{first + r * difference : 0 <= r < length}``.

    Descriptors order by the tuple (first, difference, length), which is the
    order audit reports are sorted in.
    """
    first: int
    difference: int
    length: int

    def __post_init__(self):
        for name in ("first", "difference", "length"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(
                    value, bool):
                raise InvalidArgumentError(
                    f"`{name}` must be an integer, got {value!r}")
        if self.first < 0:
            raise InvalidArgumentError(
                f"`first` must be non-negative, got {self.first}")
        if self.difference < 1:
            raise InvalidArgumentError(
                f"`difference` must be at least 1, got {self.difference}")
        if self.length < 1:
            raise InvalidArgumentError(
                f"`length` must be at least 1, got {self.length}")
        if self.last > ELEMENT_MAX:
            raise InvalidArgumentError(
                f"descriptor {self.as_tuple()} runs past the limit 2**62")

    @property
    def last(self) -> int:
        return self.first + (self.length - 1) * self.difference

    def as_tuple(self) -> Tuple[int, int, int]:
        return (int(self.first), int(self.difference), int(self.length))

    @classmethod
    def from_tuple(cls, values: Sequence[int]) -> "APSetDescriptor":
        if len(values) != 3:
            raise InvalidArgumentError(
                f"a descriptor needs (first, difference, length), got {values!r}"
            )
        return cls(*(int(v) for v in values))

    def expand(self) -> IntegerSet:
        return expand(self)

    def __str__(self) -> str:
        return f"({self.first},{self.difference},{self.length})"


def expand(P: APSetDescriptor) -> IntegerSet:
    return IntegerSet(range(P.first, P.last + 1, P.difference))


def recognize_ap(A: IntegerSet) -> Optional[APSetDescriptor]:
    r"""Return the AP descriptor of `A`, or None when its gaps are unequal.

    A singleton is reported with difference 1; any difference would be
    vacuously consistent.

    Example:
        >>> recognize_ap(IntegerSet([3, 5, 7, 9]))
        APSetDescriptor(first=3, difference=2, length=4)
    """
    if len(A) == 1:
        return APSetDescriptor(A.min, 1, 1)
    gaps = np.diff(A.as_array())
    if np.all(gaps == gaps[0]):
        return APSetDescriptor(A.min, int(gaps[0]), len(A))
    return None


def is_ap_set(A: IntegerSet, min_length: int = 1) -> bool:
    r"""True if `A` is an AP-set with at least `min_length` elements.
    Arithmetic classifiers use ``min_length=3``."""
    return len(A) >= min_length and recognize_ap(A) is not None


def _strided_union_size(m: int, n: int, k: int) -> int:
    r"""|{i + k*j : 0 <= i < m, 0 <= j < n}| for k >= 1.

    Row j covers [k*j, k*j + m - 1]; rows are disjoint once k >= m and
    overlap into one contiguous run otherwise.
    """
    if k >= m:
        return m * n
    return m + k * (n - 1)


def ap_sumset_cardinality(P: APSetDescriptor, Q: APSetDescriptor) -> int:
    r"""|expand(P) + expand(Q)| without enumerating when one difference
    divides the other; other pairs fall back to the explicit sumset.

    Example:
        >>> ap_sumset_cardinality(APSetDescriptor(0, 1, 3), APSetDescriptor(0, 4, 3))
        9
    """
    if P.length == 1:
        return Q.length
    if Q.length == 1:
        return P.length
    if Q.difference % P.difference == 0:
        return _strided_union_size(P.length, Q.length,
                                   Q.difference // P.difference)
    if P.difference % Q.difference == 0:
        return _strided_union_size(Q.length, P.length,
                                   P.difference // Q.difference)
    return len(sumset(expand(P), expand(Q)))
