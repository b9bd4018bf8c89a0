# Copyright (c) iasikit authors. All rights reserved.
from typing import Iterable, List, Optional, Tuple


def is_list_of(seq, expected_type) -> bool:
    r"""Whether `seq` is a list whose items are all `expected_type`."""
    return isinstance(seq, list) and all(
        isinstance(item, expected_type) for item in seq)


def split_csv_ints(text: str) -> List[int]:
    r"""Parse "2,3,5" into [2, 3, 5]; blanks around and between commas are
    ignored.

    Raises:
        ValueError: a token is not an integer
    """
    return [int(tok) for tok in (t.strip() for t in text.split(",")) if tok]


def first_duplicate(items: Iterable) -> Optional[Tuple[int, int]]:
    r"""Indices `(i, j)`, i < j, of the first repeated item, or None.
    Items must be hashable."""
    seen = {}
    for j, item in enumerate(items):
        if item in seen:
            return seen[item], j
        seen[item] = j
    return None
