# Copyright (c) iasikit authors. All rights reserved.
import json
from pathlib import Path
from typing import Dict, Iterable, Iterator, Mapping, Optional, Union

from ..core import (InvalidArgumentError, LabelCollisionError,
                    MissingLabelError, ParseError, first_duplicate)
from ..fileio import dump
from ..sets import IntegerSet


class SetLabeling(Mapping[str, IntegerSet]):
    r"""A vertex -> IntegerSet assignment.

    The mapping is read-only once built. By default it must be injective
    (no two vertices share a set); transported labelings are built with
    ``check_injective=False`` and then checked by :func:`verify_iasi`, which
    reports rather than raises.

    Args:
        assignments (Mapping[str, IntegerSet | Iterable[int]]): the labels,
            plain integer iterables are converted.
        check_injective (bool): raise :class:`LabelCollisionError` when two
            vertices carry the same set. Defaults to True.

    Example:
        >>> f = SetLabeling({"u": [0, 1, 2], "v": [0, 4, 8]})
        >>> str(f["v"])
        "{0,4,8}"
    """
    def __init__(self,
                 assignments: Mapping[str, Union[IntegerSet, Iterable[int]]],
                 check_injective: bool = True):
        labels: Dict[str, IntegerSet] = {}
        for v, label in assignments.items():
            if not isinstance(v, str) or not v:
                raise InvalidArgumentError(
                    f"vertex ids must be non-empty strings, got {v!r}")
            labels[v] = label if isinstance(label, IntegerSet) \
                else IntegerSet(label)
        self._labels = labels
        if check_injective:
            vertices = list(labels)
            clash = first_duplicate(labels.values())
            if clash is not None:
                pair = (vertices[clash[0]], vertices[clash[1]])
                raise LabelCollisionError(
                    f"vertices {pair[0]!r} and {pair[1]!r} share the label "
                    f"{labels[pair[0]]}", pair)

    def __getitem__(self, v: str) -> IntegerSet:
        try:
            return self._labels[v]
        except KeyError:
            raise MissingLabelError(f"vertex {v!r} has no label")

    def __contains__(self, v) -> bool:
        return v in self._labels

    def get(self, v: str, default=None):
        return self._labels.get(v, default)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {label}" for v, label in self._labels.items())
        return f"SetLabeling({body})"

    def cardinality(self, v: str) -> int:
        return len(self[v])

    def restrict(self, vertices: Iterable[str]) -> "SetLabeling":
        r"""The labeling restricted to `vertices` (all must be labeled)."""
        return SetLabeling({v: self[v] for v in vertices},
                           check_injective=False)

    @classmethod
    def from_dict(cls,
                  data: Mapping,
                  check_injective: bool = True) -> "SetLabeling":
        if not isinstance(data, Mapping):
            raise InvalidArgumentError(
                f"a labeling must be a JSON object, got {type(data).__name__}")
        return cls(data, check_injective=check_injective)

    def to_dict(self) -> Dict[str, list]:
        return {v: label.to_list() for v, label in self._labels.items()}


def _check_entry(v, values, source: str):
    if not isinstance(values, list) or not values:
        raise ParseError(f"label of {v!r} must be a non-empty array",
                         source=source)
    for x in values:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ParseError(
                f"label of {v!r} holds {x!r}, expected a non-negative integer",
                source=source)


def labeling_from_json(text: str,
                       source: str = "<string>",
                       check_injective: bool = True) -> SetLabeling:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno, source=source)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object of vertex -> array",
                         line=1,
                         column=1,
                         source=source)
    for v, values in data.items():
        _check_entry(v, values, source)
    try:
        return SetLabeling.from_dict(data, check_injective=check_injective)
    except InvalidArgumentError as e:
        raise ParseError(e.message, source=source)


def load_labeling(file: Union[str, Path],
                  check_injective: bool = False) -> SetLabeling:
    r"""Read a labeling file ``{"u": [0,1,2], "v": [0,4,8]}``.

    Injectivity is not demanded here: a duplicate label is a property of the
    labeling that :func:`verify_iasi` reports, not a format error.

    Raises:
        FileNotFoundError: `file` does not exist
        ParseError: invalid JSON or entries that are not sets
    """
    with open(file, "r") as f:
        text = f.read()
    return labeling_from_json(text, str(file), check_injective)


def dump_labeling(f: SetLabeling,
                  file: Optional[Union[str, Path]] = None) -> Optional[str]:
    return dump(f.to_dict(), file, file_format="json")
