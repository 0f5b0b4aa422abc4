"""
IdentityReport: the outcome of one exact identity check.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .laurent import LaurentPoly
from .qtfield import QtRational, render


@dataclass
class IdentityReport:
    id: str
    params: dict
    status: str
    difference: object = None
    timing: float = 0.0
    label: str = "proven"
    detail: dict = field(default_factory=dict)

    @property
    def equal(self):
        return self.status == "equal"

    def to_dict(self):
        diff = self.difference
        if isinstance(diff, (QtRational, int)):
            diff = render(diff)
        elif isinstance(diff, LaurentPoly):
            diff = str(diff)
        elif isinstance(diff, dict):
            diff = {k: render(v) if isinstance(v, QtRational) else v for k, v in diff.items()}
        out = {"id": self.id, "params": self.params, "status": self.status,
               "difference": diff, "label": self.label, "timing": round(self.timing, 3)}
        if self.detail:
            out["detail"] = {k: (render(v) if isinstance(v, QtRational) else
                                 str(v) if isinstance(v, LaurentPoly) else v)
                             for k, v in self.detail.items()}
        return out

    def to_json(self, timing=True):
        d = self.to_dict()
        if not timing:
            d.pop("timing")
        return json.dumps(d, sort_keys=False)


def compare(identity, params, lhs, rhs, label="proven", started=None, **detail):
    """Build a report from two exact values (scalars or polynomials)."""
    diff = lhs - rhs
    status = "differ" if diff else "equal"
    elapsed = time.perf_counter() - started if started is not None else 0.0
    if status == "equal":
        diff = 0 if not isinstance(diff, LaurentPoly) else LaurentPoly.zero(diff.n)
    return IdentityReport(identity, params, status, diff, elapsed, label, dict(detail))


@contextmanager
def timer():
    box = {"start": time.perf_counter()}
    yield box
    box["elapsed"] = time.perf_counter() - box["start"]
