"""Verification reports and their two serializations (text line, dict)."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

EXACT_MATCH = "exact-match"
MISMATCH = "mismatch"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    """Outcome of one verification run.

    A mismatch always carries the smallest offending index together with
    the two values seen there; a skip carries its reason in ``detail``.
    """

    id: str
    kind: str
    order: int
    status: str
    first_bad_index: Optional[int] = None
    lhs_value: object = None
    rhs_value: object = None
    detail: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == EXACT_MATCH

    def to_line(self, include_elapsed: bool = False) -> str:
        parts = [self.id, self.status, f"N={self.order}"]
        if self.status == MISMATCH and self.first_bad_index is not None:
            parts.append(
                f"index={self.first_bad_index} lhs={self.lhs_value} rhs={self.rhs_value}"
            )
        if self.detail:
            parts.append(f"[{self.detail}]")
        if include_elapsed:
            parts.append(f"elapsed={self.elapsed:.3f}s")
        return " ".join(parts)

    def to_dict(self, include_elapsed: bool = False) -> dict:
        d = {
            "id": self.id,
            "kind": self.kind,
            "order": self.order,
            "status": self.status,
        }
        if self.first_bad_index is not None:
            d["first_bad_index"] = self.first_bad_index
            d["lhs_value"] = str(self.lhs_value)
            d["rhs_value"] = str(self.rhs_value)
        if self.detail:
            d["detail"] = self.detail
        if include_elapsed:
            d["elapsed"] = self.elapsed
        return d


class _Stopwatch:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


def stopwatch() -> _Stopwatch:
    return _Stopwatch()
