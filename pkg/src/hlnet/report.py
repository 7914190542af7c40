"""Machine-readable outcomes of claim checks and cutset searches."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

VERIFIED = "verified"
REFUTED = "refuted"
BOUNDED = "bounded"

REPORT_SCHEMA = "hlnet/report/v1"


@dataclass
class VerificationReport:
    claim_id: str
    parameters: dict[str, Any]
    status: str
    witness: Any = None
    counterwitness: Any = None
    detail: str = ""
    population: list[str] = field(default_factory=list)
    checks: int = 0
    seeds: list[int] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in (VERIFIED, REFUTED, BOUNDED):
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        doc = {
            "schema": REPORT_SCHEMA,
            "claimId": self.claim_id,
            "parameters": self.parameters,
            "status": self.status,
            "detail": self.detail,
            "population": self.population,
            "checks": self.checks,
            "witness": self.witness,
            "counterwitness": self.counterwitness,
            "seeds": self.seeds,
        }
        if timing:
            doc["elapsedMillis"] = round(self.elapsed_ms, 3)
        return doc

    def to_json(self, timing: bool = False) -> str:
        return dumps(self.to_dict(timing))


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class Stopwatch:
    def __enter__(self) -> Stopwatch:
        self._t0 = time.perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *exc) -> None:
        self.ms = (time.perf_counter() - self._t0) * 1000.0
