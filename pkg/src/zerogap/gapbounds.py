"""Explicit zero-gap bound formulas on iterated-log inputs.

Every formula here depends on the analytic conductor C only through iterated
logarithms, and the interesting regimes have C far beyond floating-point
range, so inputs are carried as a :class:`LogScaleInput`: exactly one of C,
log C, loglog C, normalised internally to loglog C.

The bounds themselves:

* ``thm1_bound``   (pi/4)(1+2 theta) / [log X - logloglog X - (4+log 2)]
                   with X = loglog C / log(m+2); the o(1) in the subtracted
                   constant is taken as 0 and flagged in the note.
* ``thm2_bound``   leading term (pi/2)(1+2 theta) / logloglog(C^(1/m)); the
                   unknown O(second-order) term is not added.
* ``classical_bounds``  the Hall-Hayman zeta bound, Siegel's q-aspect bound
                   (leading term pi / logloglog q), and Littlewood's bound
                   with the admissible constant A = 32.

A bound is *inapplicable* (value None) rather than wrong when its denominator
is not safely positive; ``BoundResult.denominator`` is then reported as the
(non-positive) deficit so that `value is present iff denominator > 0` holds
in every case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import DomainError
from .zeroscan import GapReport
from . import lfunc

__all__ = [
    "LogScaleInput",
    "BoundResult",
    "thm1_bound",
    "thm2_bound",
    "classical_bounds",
    "annotate_gap_report",
    "FalsificationEvent",
]

_LOG2 = math.log(2.0)


class FalsificationEvent(AssertionError):
    """An applicable bound was violated by a measured distance; this should
    never happen and indicates a defect somewhere in the pipeline."""


@dataclass(frozen=True)
class LogScaleInput:
    """Conductor-scale input: exactly one of C, log C, loglog C.

    Normalised to loglog C on construction; impossible conversions (negative
    iterated logs, non-finite C) raise :class:`DomainError` rather than
    silently overflowing.
    """

    loglog: float

    @classmethod
    def from_C(cls, C: float) -> "LogScaleInput":
        if not (C > 0 and math.isfinite(C)):
            raise DomainError("C must be a finite positive float")
        logC = math.log(C)
        if logC <= 0:
            raise DomainError("need C > 1 so that log C is positive")
        return cls(loglog=math.log(logC))

    @classmethod
    def from_logC(cls, logC: float) -> "LogScaleInput":
        if not (logC > 0 and math.isfinite(logC)):
            raise DomainError("log C must be a finite positive float")
        return cls(loglog=math.log(logC))

    @classmethod
    def from_loglogC(cls, loglogC: float) -> "LogScaleInput":
        if not (loglogC > 0 and math.isfinite(loglogC)):
            raise DomainError("loglog C must be a finite positive float")
        return cls(loglog=loglogC)

    @classmethod
    def from_kwargs(cls, C: float | None = None, logC: float | None = None,
                    loglogC: float | None = None) -> "LogScaleInput":
        given = [v is not None for v in (C, logC, loglogC)]
        if sum(given) != 1:
            raise DomainError("supply exactly one of C, logC, loglogC")
        if C is not None:
            return cls.from_C(C)
        if logC is not None:
            return cls.from_logC(logC)
        return cls.from_loglogC(loglogC)


@dataclass(frozen=True)
class BoundResult:
    """Value of a gap bound, or None with the reason it does not apply.

    ``denominator`` is the positive denominator when the bound applies; when
    it does not, it carries the non-positive deficit that gated it (see the
    note text), preserving `value present iff denominator > 0`.
    """

    value: float | None
    denominator: float
    note: str

    def __post_init__(self):
        if (self.value is not None) != (self.denominator > 0):
            raise DomainError("value must be present iff denominator > 0")
        if self.value is not None and not self.value > 0:
            raise DomainError("present bound values are positive")

    def to_json(self) -> dict:
        return {"value": self.value, "denominator": self.denominator,
                "note": self.note}


_EDGE_FRACTION = 0.1  # "edge regime" flag: denominator within 10% of zero


def thm1_bound(m: int, theta: float, conductor: LogScaleInput) -> BoundResult:
    """Nearest-zero distance bound in the iterated-log conductor aspect.

    X = loglog C / log(m+2) must exceed 1; additionally loglog X must exceed
    1 for the triple log to sit in its asymptotic regime, else the bound is
    reported inapplicable.
    """
    if m < 1:
        raise DomainError("degree m must be >= 1")
    if not 0.0 <= theta <= 1.0:
        raise DomainError("theta must lie in [0, 1]")
    X = conductor.loglog / math.log(m + 2)
    if X <= 1.0:
        raise DomainError("loglog C must exceed log(m+2)")
    logX = math.log(X)
    loglogX = math.log(logX) if logX > 0 else float("-inf")
    if loglogX <= 1.0:
        return BoundResult(
            value=None, denominator=min(loglogX - 1.0, 0.0),
            note="inapplicable: loglog X <= 1 (below iterated-log validity "
                 "floor; denominator reports the deficit)")
    denom = logX - math.log(loglogX) - (4.0 + _LOG2)
    if denom <= 0.0:
        return BoundResult(
            value=None, denominator=denom,
            note="inapplicable: denominator non-positive at this scale")
    note = "leading-order bound; the o(1) in the subtracted constant is set to 0"
    if denom <= _EDGE_FRACTION * logX:
        note += "; edge regime (denominator within 10% of zero)"
    return BoundResult(
        value=(math.pi / 4.0) * (1.0 + 2.0 * theta) / denom,
        denominator=denom, note=note)


def thm2_bound(m: int, theta: float, conductor: LogScaleInput) -> BoundResult:
    """Leading-term gap bound pi/2 (1+2 theta) / logloglog C^(1/m).

    The second-order term of the full statement has an unknown absolute
    constant and is not added; the note records that.
    """
    if m < 1:
        raise DomainError("degree m must be >= 1")
    if not 0.0 <= theta <= 1.0:
        raise DomainError("theta must lie in [0, 1]")
    y = conductor.loglog - math.log(m)  # loglog C^(1/m)
    if y <= 0.0:
        raise DomainError("loglog C^(1/m) non-positive: iterated log undefined")
    L3 = math.log(y)
    if L3 <= 1.0:
        # below the iterated-log validity floor the dropped O(1/L3^2) term
        # dominates and the leading term is not a bound at all
        return BoundResult(
            value=None, denominator=min(L3 - 1.0, 0.0),
            note="inapplicable: logloglog C^(1/m) <= 1 (below iterated-log "
                 "validity floor; denominator reports the deficit)")
    return BoundResult(
        value=(math.pi / 2.0) * (1.0 + 2.0 * theta) / L3,
        denominator=L3,
        note="leading term only; O(1/(logloglog C^(1/m))^2) correction "
             "with unknown constant not added")


def classical_bounds(kind: str, scale: LogScaleInput) -> BoundResult:
    """Historic zeta/Dirichlet gap bounds on the same log-scale inputs.

    kind = 'hall_hayman': (pi/4) / [L3 - L5 - 32] with L3 = logloglog T and
    L5 = log log L3; 'siegel': pi / logloglog q, leading term; 'littlewood':
    32 / logloglog T.
    """
    L3 = math.log(scale.loglog) if scale.loglog > 0 else None
    if L3 is None:
        raise DomainError("iterated logs not computable at this scale")
    if kind == "hall_hayman":
        if L3 <= 1.0:
            return BoundResult(
                value=None, denominator=min(L3 - 1.0, 0.0) - 32.0,
                note="inapplicable: logloglog T too small for the five-fold "
                     "log (denominator reports the deficit)")
        L5 = math.log(math.log(L3))
        denom = L3 - L5 - 32.0
        if denom <= 0.0:
            return BoundResult(value=None, denominator=denom,
                               note="inapplicable: denominator non-positive")
        return BoundResult(value=(math.pi / 4.0) / denom, denominator=denom,
                           note="zeta nearest-zero bound, T-aspect")
    if kind == "siegel":
        if L3 <= 0.0:
            return BoundResult(value=None, denominator=L3,
                               note="inapplicable: logloglog q <= 0")
        return BoundResult(value=math.pi / L3, denominator=L3,
                           note="Dirichlet gap bound, q-aspect, leading term")
    if kind == "littlewood":
        if L3 <= 0.0:
            return BoundResult(value=None, denominator=L3,
                               note="inapplicable: logloglog T <= 0")
        return BoundResult(value=32.0 / L3, denominator=L3,
                           note="zeta gap bound with admissible constant A=32")
    raise DomainError(f"unknown bound kind {kind!r}")


def annotate_gap_report(report: GapReport, spec: lfunc.LFunctionSpec) -> GapReport:
    """Fill the bound fields of a gap report from its conductor.

    Whenever a bound is applicable the measured nearest-zero distance must
    not exceed it; a violation raises :class:`FalsificationEvent` after
    marking the report inconsistent.
    """
    if not report.conductor or report.conductor <= 0:
        raise DomainError("report must carry a positive conductor")
    m, theta = spec.degree, spec.theta

    def run(fn) -> BoundResult:
        try:
            return fn(m, theta, LogScaleInput.from_C(report.conductor))
        except DomainError as exc:
            return BoundResult(value=None, denominator=-1.0,
                               note=f"inapplicable: {exc}")

    b1 = run(thm1_bound)
    b2 = run(thm2_bound)
    report.thm1_bound = b1.value
    report.thm2_bound = b2.value
    report.thm1_applicable = b1.value is not None
    report.thm2_applicable = b2.value is not None
    report.thm1_note = b1.note
    report.thm2_note = b2.note
    consistent = True
    if report.nearest_distance is not None:
        for b in (b1, b2):
            if b.value is not None and report.nearest_distance > b.value:
                consistent = False
    report.consistent = consistent
    if not consistent:
        raise FalsificationEvent(
            f"measured nearest-zero distance {report.nearest_distance} "
            f"exceeds an applicable bound at T={report.T} "
            f"(thm1={b1.value}, thm2={b2.value}, C={report.conductor})")
    return report
