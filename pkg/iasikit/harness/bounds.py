# Copyright (c) iasikit authors. All rights reserved.
from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterator, List, Tuple

from ..core import InvalidArgumentError, split_csv_ints
from ..sets import APSetDescriptor


@dataclass(frozen=True)
class SearchBounds:
    r"""The box of AP descriptors an audit enumerates: first term in
    [0, first_max], difference in [1, diff_max], length in
    [len_min, len_max]."""
    first_max: int = 3
    diff_max: int = 6
    len_min: int = 3
    len_max: int = 5

    def __post_init__(self):
        if self.first_max < 0:
            raise InvalidArgumentError(
                f"`first_max` must be non-negative, got {self.first_max}")
        if self.diff_max < 1:
            raise InvalidArgumentError(
                f"`diff_max` must be at least 1, got {self.diff_max}")
        if self.len_min < 3:
            raise InvalidArgumentError(
                f"`len_min` must be at least 3, got {self.len_min}")
        if self.len_max < self.len_min:
            raise InvalidArgumentError(
                f"`len_max` ({self.len_max}) is below `len_min` ({self.len_min})")

    @classmethod
    def from_string(cls, text: str) -> "SearchBounds":
        r"""Parse "first_max,diff_max,len_min,len_max", e.g. "3,6,3,5"."""
        try:
            values = split_csv_ints(text)
        except ValueError:
            raise InvalidArgumentError(f"bounds must be four integers, got {text!r}")
        if len(values) != 4:
            raise InvalidArgumentError(f"bounds must be four integers, got {text!r}")
        return cls(*values)

    def to_dict(self) -> dict:
        return asdict(self)

    def descriptors(self) -> List[APSetDescriptor]:
        return [
            APSetDescriptor(a, d, n)
            for a, d, n in product(range(self.first_max + 1),
                                   range(1, self.diff_max + 1),
                                   range(self.len_min, self.len_max + 1))
        ]

    @property
    def space_size(self) -> int:
        return len(self.descriptors())**2


def enumerate_ap_pairs(b: SearchBounds
                       ) -> Iterator[Tuple[APSetDescriptor, APSetDescriptor]]:
    r"""Every ordered pair of descriptors within `b`, in lexicographic order
    of (first, difference, length)."""
    descriptors = b.descriptors()
    return product(descriptors, descriptors)
