# Copyright (c) iasikit authors. All rights reserved.
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..core import InvalidArgumentError
from .intset import IntegerSet

Pair = Tuple[int, int]
CompatibilityClass = Tuple[Pair, ...]


def _check_operands(A: IntegerSet, B: IntegerSet):
    for operand in (A, B):
        if not isinstance(operand, IntegerSet):
            raise InvalidArgumentError(
                f"expected a non-empty IntegerSet, got {operand!r}")


def sumset(A: IntegerSet, B: IntegerSet) -> IntegerSet:
    r"""A + B = {a + b : a in A, b in B}.

    Example:
        >>> str(sumset(IntegerSet([0, 2, 4]), IntegerSet([1, 3, 5])))
        "{1,3,5,7,9}"
    """
    _check_operands(A, B)
    sums = np.add.outer(A.as_array(), B.as_array())
    return IntegerSet(np.unique(sums).tolist())


@dataclass(frozen=True)
class CompatibilityDecomposition:
    r"""Partition of A x B into compatibility classes keyed by the common sum.

    Pairs are materialised eagerly; inside each class they are ordered by
    the element taken from `left`.
    """
    left: IntegerSet
    right: IntegerSet
    classes: Dict[int, CompatibilityClass]

    def __getitem__(self, k: int) -> CompatibilityClass:
        return self.classes[k]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def index(self) -> int:
        return len(self.classes)

    @property
    def saturation(self) -> int:
        return min(len(self.left), len(self.right))

    def class_sizes(self) -> Dict[int, int]:
        return {k: len(pairs) for k, pairs in self.classes.items()}

    def maximal(self) -> Tuple[int, int]:
        r"""(size, sum) of the largest class; ties go to the smallest sum."""
        size = max(len(pairs) for pairs in self.classes.values())
        witness = next(k for k, pairs in self.classes.items()
                       if len(pairs) == size)
        return size, witness

    def saturated(self) -> List[Tuple[int, CompatibilityClass]]:
        return [(k, pairs) for k, pairs in self.classes.items()
                if len(pairs) == self.saturation]

    def trivial(self) -> List[Tuple[int, CompatibilityClass]]:
        return [(k, pairs) for k, pairs in self.classes.items()
                if len(pairs) == 1]


def compatibility_decomposition(A: IntegerSet,
                                B: IntegerSet) -> CompatibilityDecomposition:
    _check_operands(A, B)
    classes = defaultdict(list)
    for a in A:
        for b in B:
            classes[a + b].append((a, b))
    ordered = {k: tuple(classes[k]) for k in sorted(classes)}
    return CompatibilityDecomposition(A, B, ordered)


def compatibility_index(A: IntegerSet, B: IntegerSet) -> int:
    r"""Number of distinct compatibility classes; equals |A + B|."""
    return compatibility_decomposition(A, B).index


def maximal_class_size(A: IntegerSet, B: IntegerSet) -> int:
    return compatibility_decomposition(A, B).maximal()[0]


def saturated_classes(A: IntegerSet,
                      B: IntegerSet) -> List[Tuple[int, CompatibilityClass]]:
    r"""Classes whose size reaches min(|A|, |B|), as (sum, class) pairs in
    ascending sum order; possibly empty."""
    return compatibility_decomposition(A, B).saturated()


def trivial_classes(A: IntegerSet,
                    B: IntegerSet) -> List[Tuple[int, CompatibilityClass]]:
    return compatibility_decomposition(A, B).trivial()
