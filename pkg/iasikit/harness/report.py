# Copyright (c) iasikit authors. All rights reserved.
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..config import table
from ..sets import APSetDescriptor

CONSISTENT = "consistent"
COUNTEREXAMPLES_FOUND = "counterexamples-found"


def _encode(value: Any) -> Any:
    if isinstance(value, APSetDescriptor):
        return list(value.as_tuple())
    if isinstance(value, tuple):
        return [_encode(v) for v in value]
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, list) and len(value) == 3 and all(
            isinstance(v, int) for v in value):
        return APSetDescriptor.from_tuple(value)
    return value


@dataclass(frozen=True)
class Counterexample:
    r"""One instance where the predicted and the brute-force values differ.

    For pair audits `p` and `q` are descriptors; graph audits put the family
    member in `p` and the construction parameters in `q`.
    """
    p: Any
    q: Any
    expected: Any
    observed: Any

    def to_dict(self) -> dict:
        return dict(p=_encode(self.p),
                    q=_encode(self.q),
                    expected=_encode(self.expected),
                    observed=_encode(self.observed))

    @classmethod
    def from_dict(cls, data: dict) -> "Counterexample":
        return cls(_decode(data["p"]), _decode(data["q"]), data["expected"],
                   data["observed"])


@dataclass
class AuditReport:
    theorem: str
    bounds: Dict[str, Any]
    checked: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    details: Optional[Dict[str, Any]] = None

    @property
    def verdict(self) -> str:
        return COUNTEREXAMPLES_FOUND if self.counterexamples else CONSISTENT

    @property
    def consistent(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        result = dict(theorem=self.theorem,
                      bounds=dict(self.bounds),
                      checked=self.checked,
                      counterexamples=[c.to_dict() for c in self.counterexamples],
                      verdict=self.verdict)
        if self.details is not None:
            result["details"] = self.details
        return result

    @classmethod
    def from_dict(cls, data: dict) -> "AuditReport":
        return cls(theorem=data["theorem"],
                   bounds=dict(data["bounds"]),
                   checked=data["checked"],
                   counterexamples=[
                       Counterexample.from_dict(c)
                       for c in data["counterexamples"]
                   ],
                   details=data.get("details"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self, limit: int = 20) -> str:
        r"""Plain-text rendering: a header table, then up to `limit`
        counterexamples."""
        head = table([[self.theorem, self.checked,
                       len(self.counterexamples), self.verdict]],
                     headers=["audit", "checked", "counterexamples", "verdict"])
        lines = [head]
        if self.counterexamples:
            rows = [[json.dumps(c["p"]), json.dumps(c["q"]),
                     json.dumps(c["expected"]), json.dumps(c["observed"])]
                    for c in (x.to_dict() for x in self.counterexamples[:limit])]
            lines.append(table(rows, headers=["p", "q", "expected", "observed"]))
            if len(self.counterexamples) > limit:
                lines.append(f"... {len(self.counterexamples) - limit} more")
        if self.details:
            rows = [[name, json.dumps(value)]
                    for name, value in self.details.items()]
            lines.append(table(rows, headers=["detail", "value"]))
        return "\n".join(lines)
