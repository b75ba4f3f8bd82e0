"""Verification reports: both sides of an identity instance and the verdict."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Union

from .laurent import LaurentQ, RationalQ
from .weightpoly import WeightPoly

IDENTITIES = ("EQ1", "EQ8", "EQ7", "PROP1", "EQ5", "NORM", "SYMMETRY", "GAUSS_EVAL", "ORTHO")

Value = Union[LaurentQ, RationalQ, WeightPoly]


def difference(lhs: Value, rhs: Value) -> Value:
    if isinstance(lhs, WeightPoly) or isinstance(rhs, WeightPoly):
        return lhs - rhs
    if isinstance(lhs, LaurentQ) and isinstance(rhs, LaurentQ):
        return lhs - rhs
    d = RationalQ.coerce(lhs) - RationalQ.coerce(rhs)
    return d.simplify() if d else RationalQ(LaurentQ.zero())


def exact_equal(lhs: Value, rhs: Value) -> bool:
    if isinstance(lhs, WeightPoly) or isinstance(rhs, WeightPoly):
        return lhs == rhs
    if isinstance(lhs, LaurentQ) and isinstance(rhs, LaurentQ):
        return lhs == rhs
    return RationalQ.coerce(lhs) == RationalQ.coerce(rhs)


def _render(v: Any) -> Any:
    if isinstance(v, (LaurentQ, RationalQ, WeightPoly)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _render(x) for k, x in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    lhs: Value
    rhs: Value
    passed: bool
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.identity not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}")

    @property
    def difference(self) -> Value:
        return difference(self.lhs, self.rhs)

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": _render(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "difference": str(self.difference),
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.extra:
            out["extra"] = _render(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ps = " ".join(f"{k}={_render(v)}" for k, v in self.params.items())
        lines = [f"[{status}] {self.identity} {ps} ({self.elapsed * 1000:.1f} ms)",
                 f"    lhs = {self.lhs}",
                 f"    rhs = {self.rhs}"]
        if not self.passed:
            lines.append(f"    difference = {self.difference}")
        for k, v in self.extra.items():
            lines.append(f"    {k} = {_render(v)}")
        return "\n".join(lines)


@contextmanager
def stopwatch():
    """Yields a one-element list that receives the elapsed seconds on exit."""
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - t0


def make_report(identity: str, params: dict, lhs: Value, rhs: Value, elapsed: float,
                **extra) -> VerificationReport:
    return VerificationReport(identity, params, lhs, rhs, exact_equal(lhs, rhs), elapsed, extra)
