"""Structured pass/fail results for the identity checks."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    ``counterexample`` is None on success and otherwise records the first
    location where the identity fails, with the computed and expected values.
    Integers and fractions in it are serialized as decimal strings.
    """

    check: str
    order: int | None
    passed: bool
    counterexample: dict[str, Any] | None = None
    checked: int = 1

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def success(cls, check: str, order: int | None, checked: int = 1) -> "CheckReport":
        return cls(check, order, True, None, checked)

    @classmethod
    def failure(cls, check: str, order: int | None, counterexample: dict[str, Any]) -> "CheckReport":
        return cls(check, order, False, counterexample)

    @classmethod
    def compare(cls, check: str, order: int | None, got, expected, **context) -> "CheckReport":
        """Compare two matrices entrywise; ``context`` is merged into the counterexample."""
        mismatch = got.first_mismatch(expected)
        if mismatch is None:
            return cls.success(check, order, got.rows * got.cols)
        if mismatch[0] == "shape":
            ce = {"reason": "shape", "got": list(mismatch[1]), "expected": list(mismatch[2])}
        else:
            i, j, g, e = mismatch
            ce = {"row": i, "col": j, "got": g, "expected": e}
        ce.update(context)
        return cls.failure(check, order, ce)

    @staticmethod
    def combine(check: str, order: int | None, reports) -> "CheckReport":
        """First failing sub-report wins; otherwise sum the checked counts."""
        total = 0
        for r in reports:
            if not r.passed:
                ce = dict(r.counterexample or {})
                ce.setdefault("part", r.check)
                return CheckReport.failure(check, order, ce)
            total += r.checked
        return CheckReport.success(check, order, total)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "order": self.order,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": _jsonable(self.counterexample),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
