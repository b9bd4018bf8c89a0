# Copyright (c) iasikit authors. All rights reserved.
import operator
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from ..core import InvalidArgumentError, ParseError

# max(A) + max(B) must fit in an unsigned 64-bit word
ELEMENT_MAX = 2**62

_TOKEN = re.compile(r"\s*(\d+)\s*(?:,|$)")


@dataclass(frozen=True, init=False, repr=False)
class IntegerSet:
    r"""A finite, non-empty set of non-negative integers kept in sorted-unique
    normal form. Instances are immutable and hashable, so they can be used as
    dictionary keys when checking a labeling for injectivity.

    Example:
        >>> A = IntegerSet([8, 0, 4, 4])
        >>> A.elements
        (0, 4, 8)
        >>> str(A)
        "{0,4,8}"
    """
    elements: Tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        try:
            values = sorted({operator.index(x) for x in elements})
        except TypeError:
            raise InvalidArgumentError(
                f"set elements must be integers, got {elements!r}")
        if not values:
            raise InvalidArgumentError("an IntegerSet must be non-empty")
        if values[0] < 0:
            raise InvalidArgumentError(
                f"set elements must be non-negative, got {values[0]}")
        if values[-1] > ELEMENT_MAX:
            raise InvalidArgumentError(
                f"set element {values[-1]} exceeds the limit 2**62")
        object.__setattr__(self, "elements", tuple(values))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __repr__(self) -> str:
        return f"IntegerSet({self})"

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def to_list(self) -> List[int]:
        return list(self.elements)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.uint64)


def parse_integer_set(text: str, source: str = "<string>") -> IntegerSet:
    r"""Parse the brace form ``{0,4,8}``; whitespace is ignored.

    Raises:
        ParseError: with the 1-based column of the offending character
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise ParseError("expected a set of the form {a,b,...}",
                         line=1,
                         column=offset + 1,
                         source=source)
    body = stripped[1:-1]
    pos = 0
    values = []
    while pos < len(body):
        match = _TOKEN.match(body, pos)
        if match is None or match.end() == pos:
            raise ParseError("expected a non-negative integer",
                             line=1,
                             column=offset + 2 + pos,
                             source=source)
        values.append(int(match.group(1)))
        pos = match.end()
    if body.strip().endswith(","):
        raise ParseError("trailing comma",
                         line=1,
                         column=offset + 1 + len(body),
                         source=source)
    if not values:
        raise ParseError("empty set", line=1, column=offset + 1, source=source)
    try:
        return IntegerSet(values)
    except InvalidArgumentError as e:
        raise ParseError(e.message, line=1, column=offset + 1, source=source)
