"""Critical-line zero location, contour counting, and gap statistics.

The scanner works with a real rotation of the completed function on the
critical line,

    Z(t) = Re[ kappa^(-1/2) e^(i theta(t)) L(1/2 + it) ],
    theta(t) = Im log[ N^(s/2) prod_j Gamma_R(s + mu_j) ] at s = 1/2 + it,

which is the completed function with its positive archimedean modulus divided
out.  The division matters: |xi(1/2+it)| underflows doubles past |t| ~ 900,
while Z stays on the scale of |L| up to |t| = 1e4.  The functional equation
forces the rotated value to be real, and the residual imaginary part is
asserted on every evaluation as a numerical health check.

Counting is done by the argument principle applied to (s-1)^r xi(s) on the
rectangle sigma in [-1/2, 3/2].  Phase increments are accumulated in log form
(no over/underflow) with adaptive bisection of any step whose wrapped phase
jump reaches pi/2.  That function still has a pole of order r at s = 0, so
windows straddling t = 0 add r back to the winding number.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import brentq

from . import lfunc, specfun
from .lfunc import LFunctionSpec
from .specfun import DomainError

__all__ = [
    "ZeroScan",
    "GapReport",
    "ContourError",
    "IncompleteScanError",
    "WindowMarginError",
    "hardy_z",
    "count_zeros",
    "find_zeros",
    "gap_at",
    "max_consecutive_gap",
    "rvm_main_term",
]


class ContourError(ArithmeticError):
    """Contour evaluation failed (zero too close to the path, or the
    accumulated winding did not land on an integer)."""


class IncompleteScanError(ValueError):
    """Operation requires a complete scan."""


class WindowMarginError(ValueError):
    """Requested T too close to the edge of the scanned window."""


class RealityError(ArithmeticError):
    """The rotated critical-line value failed its reality assertion."""


_REALITY_REL = 1e-8
_REALITY_ABS = 1e-9


@dataclass(frozen=True)
class ZeroScan:
    """Ordered zero ordinates located in a window, with completeness audit."""

    spec: LFunctionSpec
    t_lo: float
    t_hi: float
    step: float
    ordinates: tuple[float, ...]
    residuals: tuple[float, ...]
    contour_count: int
    complete: bool

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.ordinates, self.ordinates[1:])):
            raise DomainError("ordinates must be strictly increasing")

    def to_rows(self) -> list[dict]:
        return [
            {"n": i, "gamma": g, "residual": r}
            for i, (g, r) in enumerate(zip(self.ordinates, self.residuals))
        ]

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_record(),
            "window": [self.t_lo, self.t_hi],
            "step": self.step,
            "zeros": self.to_rows(),
            "contour_count": self.contour_count,
            "complete": self.complete,
        }

    def to_csv(self) -> str:
        lines = ["n,gamma,residual"]
        for row in self.to_rows():
            lines.append(f"{row['n']},{row['gamma']!r},{row['residual']!r}")
        return "\n".join(lines) + "\n"


@dataclass
class GapReport:
    """Distances from T to the scanned zeros, with bound annotations."""

    T: float
    nearest_zero: float | None
    nearest_distance: float | None
    consecutive_gap_at_T: float | None
    conductor: float
    conductor_scaled: float
    thm1_bound: float | None = None
    thm2_bound: float | None = None
    thm1_applicable: bool = False
    thm2_applicable: bool = False
    thm1_note: str = ""
    thm2_note: str = ""
    consistent: bool | None = None

    def to_json(self) -> dict:
        return {
            "T": self.T,
            "nearest_zero": self.nearest_zero,
            "nearest_distance": self.nearest_distance,
            "consecutive_gap_at_T": self.consecutive_gap_at_T,
            "conductor": self.conductor,
            "conductor_scaled": self.conductor_scaled,
            "thm1_bound": self.thm1_bound,
            "thm2_bound": self.thm2_bound,
            "thm1_applicable": self.thm1_applicable,
            "thm2_applicable": self.thm2_applicable,
            "thm1_note": self.thm1_note,
            "thm2_note": self.thm2_note,
            "consistent": self.consistent,
        }


# ---------------------------------------------------------------------------
# Hardy Z


def _rotated_line_values(spec: LFunctionSpec, t: np.ndarray) -> np.ndarray:
    """kappa^(-1/2) e^(i theta) L(1/2 + it) on an array of real t."""
    s = 0.5 + 1j * t
    lvals = lfunc.evaluate(spec, s)
    theta = np.imag(lfunc.log_archimedean(spec, s))
    rot = np.exp(1j * theta) / cmath.sqrt(spec.root_number)
    return rot * lvals


def _check_reality(vals: np.ndarray) -> None:
    bad = np.abs(vals.imag) > _REALITY_REL * np.abs(vals) + _REALITY_ABS
    if np.any(bad):
        worst = np.argmax(np.abs(vals.imag) - _REALITY_REL * np.abs(vals))
        raise RealityError(
            f"rotated value not real: {vals.ravel()[worst]!r}")


def hardy_z(spec: LFunctionSpec, t):
    """Real rotation of the completed function on the critical line.

    Sign changes bracket critical-line zeros.  Accepts scalars or arrays;
    raises :class:`RealityError` if the rotation fails to produce a real
    number to within 1e-8 relative.
    """
    arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    vals = _rotated_line_values(spec, arr)
    _check_reality(vals)
    out = vals.real
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))


# ---------------------------------------------------------------------------
# Argument-principle counting


def _contour_rectangle(spec: LFunctionSpec) -> tuple[float, float]:
    """sigma-range of the counting rectangle, widened away from the points
    -mu_j where the completed function's gamma data sits."""
    lo, hi = -0.5, 1.5
    for m in spec.mu:
        while abs(-m.real - lo) < 0.1 and lo > -1.8:
            lo -= 0.25
        while abs(-m.real - hi) < 0.1:
            hi += 0.25
    return lo, hi


def _phase_batch(spec: LFunctionSpec, pts: np.ndarray) -> np.ndarray:
    """arg of (s-1)^r xi(s) mod 2 pi, in log form (safe at any height)."""
    lvals = lfunc.evaluate(spec, pts)
    if np.any(lvals == 0.0):
        raise ContourError("contour passes through a zero; jitter the window")
    phase = np.angle(lvals) + np.imag(lfunc.log_archimedean(spec, pts))
    if spec.pole_order:
        phase = phase + spec.pole_order * np.angle(pts - 1.0)
    return phase


def _wrap(dphi: np.ndarray | float):
    return (dphi + math.pi) % (2.0 * math.pi) - math.pi


_MAX_CONTOUR_DEPTH = 48


def _edge_phase_sum(spec: LFunctionSpec, a: complex, b: complex,
                    init_step: float) -> float:
    """Accumulated phase change of (s-1)^r xi along the segment a -> b.

    Initial uniform sampling, then adaptive bisection of every interval whose
    wrapped phase jump reaches pi/2.  Bisection past ``_MAX_CONTOUR_DEPTH``
    levels signals a zero essentially on the contour.
    """
    n = max(2, int(math.ceil(abs(b - a) / init_step)) + 1)
    ts = np.linspace(0.0, 1.0, n)
    pts = a + (b - a) * ts
    phis = _phase_batch(spec, pts)
    total = 0.0
    # worklist of (t0, t1, phi0, phi1, depth)
    stack = [(ts[i], ts[i + 1], phis[i], phis[i + 1], 0)
             for i in range(n - 2, -1, -1)]
    while stack:
        t0, t1, p0, p1, depth = stack.pop()
        d = _wrap(p1 - p0)
        if abs(d) < 0.5 * math.pi:
            total += d
            continue
        if depth >= _MAX_CONTOUR_DEPTH:
            raise ContourError(
                "adaptive contour refinement exhausted; a zero is too close "
                "to the contour (jitter the window)")
        tm = 0.5 * (t0 + t1)
        pm = float(_phase_batch(spec, np.array([a + (b - a) * tm]))[0])
        stack.append((tm, t1, pm, p1, depth + 1))
        stack.append((t0, tm, p0, pm, depth + 1))
    return total


def count_zeros(spec: LFunctionSpec, t_lo: float, t_hi: float) -> int:
    """Number of non-trivial zeros with t_lo < Im(rho) <= t_hi.

    Argument-principle winding of (s-1)^r xi(s) around the rectangle
    [sigma_lo, sigma_hi] x [t_lo, t_hi].  The residual pole at s = 0 (order
    r) is compensated when the window straddles t = 0; windows with an edge
    at t = 0 are nudged off the pole by 1e-3.
    """
    if not t_lo < t_hi:
        raise DomainError("need t_lo < t_hi")
    if spec.pole_order:
        if t_lo == 0.0:
            t_lo = 1e-3
        if t_hi == 0.0:
            t_hi = -1e-3
    slo, shi = _contour_rectangle(spec)
    corners = [
        complex(slo, t_lo),
        complex(shi, t_lo),
        complex(shi, t_hi),
        complex(slo, t_hi),
        complex(slo, t_lo),
    ]
    steps = [0.1, 0.08, 0.1, 0.08]  # horizontal edges, vertical edges
    total = 0.0
    for (a, b), st in zip(zip(corners, corners[1:]), steps):
        total += _edge_phase_sum(spec, a, b, st)
    winding = total / (2.0 * math.pi)
    if abs(winding - round(winding)) > 0.01:
        raise ContourError(
            f"non-integer winding {winding:.6f}; refinement failed")
    count = int(round(winding))
    if spec.pole_order and t_lo < 0.0 < t_hi:
        count += spec.pole_order
    return count


def _count_with_jitter(spec: LFunctionSpec, t_lo: float, t_hi: float) -> int:
    """count_zeros with deterministic jitter retries on contour failures.

    Jitters push both edges outward only, so the retried window contains the
    original one; the caller's sign-change census must agree with either.
    """
    jitters = [0.0, 1.3e-3, 3.7e-3, 8.9e-3]
    last: Exception | None = None
    for j in jitters:
        try:
            return count_zeros(spec, t_lo - j, t_hi + j)
        except ContourError as exc:  # zero sitting on (or near) the contour
            last = exc
    raise last


# ---------------------------------------------------------------------------
# Scanning


def find_zeros(spec: LFunctionSpec, t_lo: float, t_hi: float,
               step: float = 0.05) -> ZeroScan:
    """Locate critical-line zeros in [t_lo, t_hi] by sign changes of Z.

    Each sign change is refined by Brent's method to about 1e-12 in t.  The
    scan is cross-checked against the contour count; on mismatch it is
    retried once at step/4 before reporting ``complete=False``.
    """
    if step <= 0:
        raise DomainError("step must be positive")
    if not t_lo < t_hi:
        raise DomainError("need t_lo < t_hi")

    def one_pass(h: float) -> tuple[list[float], list[float]]:
        n = int(math.ceil((t_hi - t_lo) / h)) + 1
        grid = np.linspace(t_lo, t_hi, n)
        zvals = hardy_z(spec, grid)
        zeros: list[float] = []
        residuals: list[float] = []
        fn = lambda x: hardy_z(spec, float(x))
        for i in np.nonzero(np.sign(zvals[:-1]) * np.sign(zvals[1:]) < 0)[0]:
            gamma = brentq(fn, grid[i], grid[i + 1], xtol=1e-10, rtol=8.9e-16)
            zeros.append(float(gamma))
            residuals.append(abs(fn(gamma)))
        exact = np.nonzero(zvals == 0.0)[0]
        for i in exact:
            zeros.append(float(grid[i]))
            residuals.append(0.0)
        order = np.argsort(zeros)
        return [zeros[i] for i in order], [residuals[i] for i in order]

    count = _count_with_jitter(spec, t_lo, t_hi)
    zeros, residuals = one_pass(step)
    used_step = step
    if len(zeros) != count:
        used_step = step / 4.0
        zeros, residuals = one_pass(used_step)
    return ZeroScan(
        spec=spec, t_lo=t_lo, t_hi=t_hi, step=used_step,
        ordinates=tuple(zeros), residuals=tuple(residuals),
        contour_count=count, complete=(len(zeros) == count),
    )


# ---------------------------------------------------------------------------
# Gap statistics


def gap_at(spec: LFunctionSpec, scan: ZeroScan, T: float) -> GapReport:
    """Nearest-zero distance and straddling gap at height T.

    T must sit inside the window with at least one average gap of margin so
    that the nearest zero cannot hide just outside the scan.
    """
    n = max(1, len(scan.ordinates))
    avg_gap = (scan.t_hi - scan.t_lo) / n
    if not (scan.t_lo + avg_gap <= T <= scan.t_hi - avg_gap):
        raise WindowMarginError(
            f"T={T} within one average gap ({avg_gap:.3g}) of the window edge")
    gams = np.asarray(scan.ordinates)
    report = GapReport(
        T=T, nearest_zero=None, nearest_distance=None,
        consecutive_gap_at_T=None,
        conductor=lfunc.analytic_conductor(spec, T),
        conductor_scaled=lfunc.analytic_conductor_scaled(spec, T),
    )
    if gams.size:
        i = int(np.argmin(np.abs(gams - T)))
        report.nearest_zero = float(gams[i])
        report.nearest_distance = float(abs(gams[i] - T))
        below = gams[gams <= T]
        above = gams[gams > T]
        if below.size and above.size:
            report.consecutive_gap_at_T = float(above.min() - below.max())
    return report


def max_consecutive_gap(scan: ZeroScan) -> float:
    """Largest gap between consecutive ordinates inside a complete scan."""
    if not scan.complete:
        raise IncompleteScanError("scan is not complete")
    if len(scan.ordinates) < 2:
        raise IncompleteScanError("need at least two zeros")
    g = np.diff(np.asarray(scan.ordinates))
    return float(g.max())


def rvm_main_term(spec: LFunctionSpec, T: float) -> float:
    """Riemann-von Mangoldt main term for the zero count.

    zeta: zeros with 0 < gamma <= T, (T/2pi) log(T/(2 pi e)).
    Dirichlet: zeros with -T <= gamma <= T, (T/pi) log(qT/(2 pi e)).
    The conventions follow the respective classical counting formulas; the
    Dirichlet count is two-sided.
    """
    if T <= 0:
        raise DomainError("T must be positive")
    if spec.family == "zeta":
        return T / (2.0 * math.pi) * math.log(T / (2.0 * math.pi * math.e))
    if spec.family == "dirichlet":
        q = spec.conductor
        return T / math.pi * math.log(q * T / (2.0 * math.pi * math.e))
    raise DomainError(
        "main term supported for zeta and Dirichlet families only; for the "
        "quadratic Dedekind case sum the main terms of its two factors")
