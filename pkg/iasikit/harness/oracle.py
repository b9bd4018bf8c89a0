# Copyright (c) iasikit authors. All rights reserved.
from collections import Counter
from typing import List, Sequence, Tuple

from ..sets import APSetDescriptor

# Deliberately naive reference computations. Nothing here goes through
# iasikit.sets, so audit findings are checked by an independent path.


def _terms(P: APSetDescriptor) -> List[int]:
    return [P.first + r * P.difference for r in range(P.length)]


def oracle_sums(P: APSetDescriptor, Q: APSetDescriptor) -> List[int]:
    return sorted({a + b for a in _terms(P) for b in _terms(Q)})


def oracle_sumset_cardinality(P: APSetDescriptor, Q: APSetDescriptor) -> int:
    return len(oracle_sums(P, Q))


def oracle_maximal_class(P: APSetDescriptor,
                         Q: APSetDescriptor) -> Tuple[int, int]:
    r"""(size, sum) of the largest compatibility class; the smallest sum
    wins ties."""
    counts = Counter(a + b for a in _terms(P) for b in _terms(Q))
    size = max(counts.values())
    return size, min(k for k, c in counts.items() if c == size)


def oracle_is_ap(values: Sequence[int], min_length: int = 3) -> bool:
    r"""At least `min_length` distinct values with one common gap; fewer
    than two values have no gap to disagree with."""
    values = sorted(set(values))
    if len(values) < min_length:
        return False
    if len(values) < 2:
        return True
    gap = values[1] - values[0]
    return all(b - a == gap for a, b in zip(values, values[1:]))
