"""Uniform result objects for decision procedures."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def plain(value):
    """Convert numpy scalars and arrays to plain Python for JSON output."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


@dataclass
class CheckResult:
    """Outcome of one decision.

    verdict is True or False for a decided question and None when the
    question does not apply (wrong hypotheses, missing unity, cap overrun).
    The certificate holds replayable data: element labels together with the
    raw indices, so a failed check can be reproduced by table lookups alone.
    """

    name: str
    verdict: bool | None
    certificate: dict = field(default_factory=dict)
    narration: str = ""

    @property
    def status(self) -> str:
        if self.verdict is None:
            return "inapplicable"
        return "pass" if self.verdict else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "status": self.status,
            "certificate": plain(self.certificate),
            "narration": self.narration,
        }

    def __bool__(self) -> bool:  # pragma: no cover - guard against misuse
        raise TypeError("inspect .verdict explicitly; CheckResult is three-valued")
