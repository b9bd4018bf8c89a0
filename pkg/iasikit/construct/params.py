# Copyright (c) iasikit authors. All rights reserved.
from dataclasses import dataclass
from typing import Optional

from ..core import InvalidArgumentError


@dataclass(frozen=True)
class ConstructionParams:
    r"""Parameters of a first-kind construction.

    Args:
        m (int): cardinality of the labels on part X, at least 3.
        n (int): cardinality of the labels on part Y, at least 3.
        d (int): base common difference of the X labels.
        k (int, optional): Y labels use difference k * d. Must exceed `m`;
            defaults to m + 1.
    """
    m: int = 3
    n: int = 4
    d: int = 1
    k: Optional[int] = None

    def __post_init__(self):
        for name in ("m", "n"):
            if getattr(self, name) < 3:
                raise InvalidArgumentError(
                    f"`{name}` must be at least 3, got {getattr(self, name)}")
        if self.d < 1:
            raise InvalidArgumentError(f"`d` must be positive, got {self.d}")
        if self.k is not None and self.k <= self.m:
            raise InvalidArgumentError(
                f"`k` must exceed m={self.m} for a first-kind labeling, "
                f"got {self.k}")

    @property
    def multiplier(self) -> int:
        return self.k if self.k is not None else self.m + 1
