# Copyright (c) iasikit authors. All rights reserved.
from dataclasses import asdict, dataclass
from math import gcd
from typing import Optional

from ..core import InvalidArgumentError, PreconditionError
from ..sets import APSetDescriptor, IntegerSet, sumset

EQUAL_DIFFERENCE = "equal-difference"
ARITHMETIC_MULTIPLE = "arithmetic-multiple"
FIRST_KIND = "first-kind"
SECOND_KIND_COPRIME = "second-kind-coprime"
SECOND_KIND_COMMON_FACTOR = "second-kind-common-factor"

EDGE_RELATIONS = (EQUAL_DIFFERENCE, ARITHMETIC_MULTIPLE, FIRST_KIND,
                  SECOND_KIND_COPRIME, SECOND_KIND_COMMON_FACTOR)
SECOND_KIND = (SECOND_KIND_COPRIME, SECOND_KIND_COMMON_FACTOR)


@dataclass(frozen=True)
class EdgeKind:
    r"""How the common differences of two adjacent AP-set labels relate.

    `k` is d_large / d_small when one difference divides the other, and None
    for the second-kind relations.
    """
    relation: str
    k: Optional[int]
    d_small: int
    d_large: int

    def __post_init__(self):
        if self.relation not in EDGE_RELATIONS:
            raise InvalidArgumentError(f"unknown edge relation {self.relation!r}")

    @property
    def is_second_kind(self) -> bool:
        return self.relation in SECOND_KIND

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeKind":
        return cls(data["relation"], data.get("k"), data["d_small"],
                   data["d_large"])


def edge_kind(P: APSetDescriptor, Q: APSetDescriptor) -> EdgeKind:
    r"""Classify the difference relation of two AP-set labels.

    The endpoint with the smaller difference plays the role of v_i; its
    length is what the multiplier is compared against. Equal differences
    are always "equal-difference".

    Raises:
        PreconditionError: a descriptor has fewer than three terms

    Example:
        >>> edge_kind(APSetDescriptor(0, 1, 3), APSetDescriptor(0, 4, 3))
        EdgeKind(relation="first-kind", k=4, d_small=1, d_large=4)
    """
    for D in (P, Q):
        if D.length < 3:
            raise PreconditionError(
                f"AP-set labels need at least three terms, got {D}")
    small, large = (P, Q) if P.difference <= Q.difference else (Q, P)
    d_i, d_j = small.difference, large.difference
    if d_j % d_i == 0:
        k = d_j // d_i
        if k == 1:
            relation = EQUAL_DIFFERENCE
        elif k <= small.length:
            relation = ARITHMETIC_MULTIPLE
        else:
            relation = FIRST_KIND
        return EdgeKind(relation, k, d_i, d_j)
    relation = SECOND_KIND_COPRIME if gcd(d_i, d_j) == 1 \
        else SECOND_KIND_COMMON_FACTOR
    return EdgeKind(relation, None, d_i, d_j)


def is_strong_edge(A: IntegerSet, B: IntegerSet) -> bool:
    r"""|A + B| == |A| * |B|, i.e. every compatibility class is trivial."""
    return len(sumset(A, B)) == len(A) * len(B)


def is_semi_arithmetic_edge(P: APSetDescriptor, Q: APSetDescriptor) -> bool:
    r"""Whether an edge between these labels may be reduced onto: one
    difference is a multiple of the other by more than the length of the
    smaller-difference set."""
    return edge_kind(P, Q).relation == FIRST_KIND
