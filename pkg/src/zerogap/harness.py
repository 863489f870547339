"""Sweep orchestration, verification suites, and report emission.

``run_scan`` drives a family sweep (zeta t-window, all primitive Dirichlet
characters in a q-range, or fundamental discriminants in a |D|-range),
producing one annotated gap report per parameter point plus per-family
summaries.  Runs are deterministic: all randomness is seeded, sweep points
are reduced in parameter order regardless of worker count, and floats are
emitted with shortest round-trip formatting, so identical configs produce
byte-identical output.

``run_verify`` executes the module invariant suites (specfun, lfunc,
hyperbolic, paper) and reports worst margins; any failure makes the process
exit nonzero with witnesses in the JSON report.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from . import __version__, characters, gapbounds, hypgeo, lfunc, paperchecks
from . import specfun, zeroscan
from .specfun import DomainError

__all__ = [
    "SweepConfig",
    "SweepReport",
    "run_scan",
    "run_verify",
    "emit_report",
    "load_config_file",
    "SUITES",
]

CSV_COLUMNS = [
    "family", "param", "T", "nearest_zero", "nearest_distance",
    "consecutive_gap", "conductor", "thm1_bound", "thm2_bound", "consistent",
]


@dataclass
class SweepConfig:
    family: str = "zeta"
    t_min: float = 0.0
    t_max: float = 100.0
    step: float = 0.05
    q_min: int = 3
    q_max: int = 100
    d_min: int = 3
    d_max: int = 200
    char: str = "all"          # "all" or an enumeration index
    window: float = 10.0       # half-window for q/D sweeps
    report_step: float = 10.0  # spacing of zeta report heights
    tol: float = 1e-8
    workers: int = 1
    out: str | None = None
    fmt: str = "csv"

    def __post_init__(self):
        if self.family not in ("zeta", "dirichlet", "dedekind"):
            raise DomainError(f"unknown family {self.family!r}")
        if self.step <= 0 or self.window <= 0 or self.report_step <= 0:
            raise DomainError("step sizes must be positive")
        if self.workers < 1:
            raise DomainError("worker count must be >= 1")
        if self.family == "zeta" and not self.t_min < self.t_max:
            raise DomainError("empty t-window")
        if self.family == "dirichlet" and self.q_min > self.q_max:
            raise DomainError("empty q-range")
        if self.family == "dedekind" and self.d_min > self.d_max:
            raise DomainError("empty D-range")
        if self.fmt not in ("csv", "json"):
            raise DomainError("format must be csv or json")


@dataclass
class SweepRow:
    family: str
    param: str
    complete: bool
    report: zeroscan.GapReport

    def csv_cells(self) -> list[str]:
        r = self.report

        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, float):
                return repr(v)
            return str(v)

        return [
            self.family, self.param, cell(r.T), cell(r.nearest_zero),
            cell(r.nearest_distance), cell(r.consecutive_gap_at_T),
            cell(r.conductor), cell(r.thm1_bound), cell(r.thm2_bound),
            cell(r.consistent),
        ]

    def to_json(self) -> dict:
        out = {"family": self.family, "param": self.param,
               "complete": self.complete}
        out.update(self.report.to_json())
        return out


@dataclass
class SweepReport:
    rows: list[SweepRow]
    summary: dict
    config: dict
    version: str = __version__
    suite_results: list | None = None

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "summary": self.summary,
            "rows": [r.to_json() for r in self.rows],
            "suite_results": self.suite_results,
        }


def _scan_and_report(spec, t_lo, t_hi, step, t_points, family, param) -> list[SweepRow]:
    scan = zeroscan.find_zeros(spec, t_lo, t_hi, step)
    rows = []
    for T in t_points:
        rep = zeroscan.gap_at(spec, scan, T)
        gapbounds.annotate_gap_report(rep, spec)
        rows.append(SweepRow(family=family, param=param,
                             complete=scan.complete, report=rep))
    return rows


def _zeta_points(cfg: SweepConfig, scan_len: int) -> list[float]:
    margin = (cfg.t_max - cfg.t_min) / max(1, scan_len)
    lo = cfg.t_min + margin
    hi = cfg.t_max - margin
    pts = []
    T = math.ceil(lo)
    while T <= hi:
        pts.append(float(T))
        T += cfg.report_step
    return pts


def _sweep_units(cfg: SweepConfig):
    """Independent work units, in deterministic parameter order."""
    if cfg.family == "zeta":
        def unit():
            spec = lfunc.make_zeta()
            scan = zeroscan.find_zeros(spec, cfg.t_min, cfg.t_max, cfg.step)
            rows = []
            for T in _zeta_points(cfg, max(1, len(scan.ordinates))):
                rep = zeroscan.gap_at(spec, scan, T)
                gapbounds.annotate_gap_report(rep, spec)
                rows.append(SweepRow("zeta",
                                     f"window[{cfg.t_min}..{cfg.t_max}]",
                                     scan.complete, rep))
            return rows, scan
        return [unit]

    if cfg.family == "dirichlet":
        def make_unit(q: int):
            def unit():
                prims = characters.primitive_characters(q)
                if cfg.char != "all":
                    idx = int(cfg.char)
                    if idx >= len(prims):
                        raise DomainError(
                            f"character index {idx} out of range for q={q}")
                    prims = [prims[idx]]
                rows = []
                scans = []
                for i, chi in enumerate(prims):
                    spec = lfunc.make_dirichlet(chi)
                    w = cfg.window
                    scan = zeroscan.find_zeros(spec, -w, w, cfg.step)
                    if not scan.ordinates:  # empty window: widen once
                        scan = zeroscan.find_zeros(spec, -2 * w, 2 * w, cfg.step)
                    rep = zeroscan.gap_at(spec, scan, 0.0)
                    gapbounds.annotate_gap_report(rep, spec)
                    idx = i if cfg.char == "all" else int(cfg.char)
                    rows.append(SweepRow("dirichlet", f"q={q};chi={idx}",
                                         scan.complete, rep))
                    scans.append(scan)
                return rows, scans
            return unit
        qs = [q for q in range(cfg.q_min, cfg.q_max + 1)
              if characters.primitive_characters(q)]
        return [make_unit(q) for q in qs]

    # dedekind
    def make_unit_d(D: int):
        def unit():
            spec = lfunc.make_dedekind_quadratic(D)
            w = cfg.window
            scan = zeroscan.find_zeros(spec, -w, w, cfg.step)
            rep = zeroscan.gap_at(spec, scan, 0.0)
            gapbounds.annotate_gap_report(rep, spec)
            return [SweepRow("dedekind", f"D={D}", scan.complete, rep)], scan
        return unit

    ds = []
    for a in range(cfg.d_min, cfg.d_max + 1):
        for D in (a, -a):
            if abs(D) >= 3 and characters.is_fundamental_discriminant(D):
                ds.append(D)
    return [make_unit_d(D) for D in ds]


def run_scan(cfg: SweepConfig) -> SweepReport:
    """Execute the sweep described by ``cfg``; deterministic given the config."""
    units = _sweep_units(cfg)
    results = []
    if cfg.workers == 1:
        for u in units:
            results.append(u())
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(u) for u in units]
            results = [f.result() for f in futures]  # submit order

    rows: list[SweepRow] = []
    for unit_rows, _ in results:
        rows.extend(unit_rows)

    lowest = [r.report.nearest_distance for r in rows
              if r.family in ("dirichlet", "dedekind")
              and r.report.nearest_distance is not None]
    incomplete = sum(1 for r in rows if not r.complete)
    summary: dict = {
        "rows": len(rows),
        "incomplete_rows": incomplete,
        "all_consistent": all(r.report.consistent is not False for r in rows),
    }
    if cfg.family == "zeta":
        scan = results[0][1]
        summary["min_ordinate"] = min(scan.ordinates) if scan.ordinates else None
        summary["max_consecutive_gap"] = (
            zeroscan.max_consecutive_gap(scan)
            if scan.complete and len(scan.ordinates) >= 2 else None)
        summary["zero_count"] = scan.contour_count
    if lowest:
        summary["min_lowest_zero"] = min(lowest)
        summary["max_lowest_zero"] = max(lowest)
    return SweepReport(rows=rows, summary=summary, config=asdict(cfg))


# ---------------------------------------------------------------------------
# Report emission


def emit_report(report: SweepReport, fmt: str, path: str) -> None:
    """Write a sweep report as CSV (fixed column schema) or JSON.

    Floats are rendered with ``repr`` so loading reproduces them bit-exactly;
    absent bounds become empty CSV cells / JSON nulls.
    """
    if fmt == "csv":
        lines = [",".join(CSV_COLUMNS)]
        for row in report.rows:
            lines.append(",".join(row.csv_cells()))
        data = "\n".join(lines) + "\n"
    elif fmt == "json":
        data = json.dumps(report.to_json(), indent=1) + "\n"
    else:
        raise DomainError("format must be csv or json")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)


def load_config_file(path: str) -> dict:
    """Flat key=value config format; '#' starts a comment."""
    out: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"bad config line: {line!r}")
            key, val = (x.strip() for x in line.split("=", 1))
            out[key] = val
    return out


# ---------------------------------------------------------------------------
# Verification suites


def _entry(name: str, passed: bool, worst, extra: dict | None = None) -> dict:
    e = {"name": name, "pass": bool(passed),
         "worst_margin": None if worst is None else float(worst)}
    if extra:
        e.update(extra)
    return e


def _builtin_specs() -> list[lfunc.LFunctionSpec]:
    specs = [lfunc.make_zeta()]
    for q in (3, 4, 5, 7, 8, 11):
        for chi in characters.primitive_characters(q):
            specs.append(lfunc.make_dirichlet(chi))
    for D in (5, -3, -4):
        specs.append(lfunc.make_dedekind_quadratic(D))
    return specs


def suite_specfun() -> list[dict]:
    rng = np.random.default_rng(101)
    out = []

    # gamma reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    s = rng.uniform(0.05, 0.95, 10000) + 1j * rng.uniform(-30, 30, 10000)
    lhs = np.exp(specfun.log_gamma(s) + specfun.log_gamma(1.0 - s))
    rhs = math.pi / np.sin(math.pi * s)
    rel = np.max(np.abs(lhs - rhs) / np.abs(rhs))
    out.append(_entry("gamma_reflection_1e4", rel < 1e-9, 1e-9 - rel))

    # Euler-Maclaurin zeta vs truncated Dirichlet sum with integral tail
    s = rng.uniform(1.5, 6.0, 100) + 1j * rng.uniform(-50, 50, 100)
    em = specfun.riemann_zeta(s)
    n = np.arange(1, 100001, dtype=np.float64)
    direct = np.empty_like(em)
    for i, sc in enumerate(s):
        terms = np.exp(-sc * np.log(n))
        big = 100001.0
        direct[i] = terms.sum() + big ** (1 - sc) / (sc - 1) + 0.5 * big ** (-sc)
    dev = np.max(np.abs(em - direct))
    out.append(_entry("zeta_em_vs_direct_sum_100", dev < 1e-12, 1e-12 - dev))

    # pure Dirichlet sum (no corrections) where it actually converges
    s = rng.uniform(14.0, 30.0, 20) + 1j * rng.uniform(-20, 20, 20)
    em = specfun.riemann_zeta(s)
    direct = np.array([complex(np.sum(np.exp(-sc * np.log(n[:100000]))))
                       for sc in s])
    dev2 = np.max(np.abs(em - direct))
    out.append(_entry("zeta_em_vs_pure_sum_sigma14", dev2 < 1e-12, 1e-12 - dev2))

    # fractional-part integral oracle for zeta on the real axis
    worst = None
    ok = True
    for sg in (1.5, 2.0, 3.0, 5.0):
        z = specfun.riemann_zeta(complex(sg)).real
        I = paperchecks._fracint_quadrature(sg)
        dev = abs(z - (sg / (sg - 1.0) - sg * I))
        worst = dev if worst is None else max(worst, dev)
        ok = ok and dev < 1e-8
    out.append(_entry("zeta_fracpart_oracle", ok, 1e-8 - worst))

    # Hurwitz decomposition sum_a zeta(s, a/q) = q^s zeta(s)
    worst = 0.0
    for q in (3, 4, 5, 7):
        ss = rng.uniform(-1.5, 4.0, 20) + 1j * rng.uniform(-30, 30, 20)
        for sc in ss:
            sc = complex(sc)
            total = sum(specfun.hurwitz_zeta(sc, a / q) for a in range(1, q + 1))
            worst = max(worst, abs(total * q ** (-sc) -
                                   specfun.riemann_zeta(sc)))
    out.append(_entry("hurwitz_decomposition", worst < 1e-10, 1e-10 - worst))

    # sn degenerate limit and differential identity
    z = rng.uniform(-1.2, 1.2, 1000) + 1j * rng.uniform(-0.6, 0.6, 1000)
    dev_sin = np.max(np.abs(specfun.jacobi_sn(z, 0.0) - np.sin(z)))
    ok = dev_sin < 1e-12
    worst_ode = 0.0
    h = 1e-5
    for k in (0.3, 0.6, 0.9):
        sn = specfun.jacobi_sn(z, k)
        dsn = (specfun.jacobi_sn(z + h, k) - specfun.jacobi_sn(z - h, k)) / (2 * h)
        resid = np.abs(dsn * dsn - (1 - sn * sn) * (1 - k * k * sn * sn))
        worst_ode = max(worst_ode, float(np.max(resid)))
    out.append(_entry("sn_degenerate_and_ode", ok and worst_ode < 1e-7,
                      1e-7 - max(worst_ode, dev_sin)))

    # elliptic integral monotonicity and the square modulus
    ks = np.linspace(0.0, 0.99, 200)
    Ks = np.array([specfun.elliptic_k(float(k)) for k in ks])
    mono = bool(np.all(np.diff(Ks) > 0))
    kp = specfun.solve_modulus_from_ratio(1.0)
    sq = abs(math.sqrt(1 - kp * kp) - 1 / math.sqrt(2))
    out.append(_entry("elliptic_k_monotone_square_modulus",
                      mono and sq < 1e-9, 1e-9 - sq))
    return out


def suite_lfunc() -> list[dict]:
    rng = np.random.default_rng(202)
    out = []

    specs = _builtin_specs()
    worst = 0.0
    for spec in specs:
        pts = rng.uniform(-0.5, 1.5, 1000) + 1j * rng.uniform(0.0, 50.0, 1000)
        for sc in pts[:: max(1, len(pts) // 200)]:  # 200 per spec here; the
            # acceptance suite runs the full 10^3 per spec
            worst = max(worst, lfunc.functional_equation_residual(spec, complex(sc)))
    out.append(_entry("functional_equation_residual", worst < 1e-8,
                      1e-8 - worst))

    # coefficient bound |Lambda_L(n)| <= m Lambda(n) n^theta
    ok = True
    for spec in specs:
        lam = specfun.mangoldt_sieve(10000)
        for n in range(2, 10001):
            if lam[n] == 0.0:
                continue
            bound = spec.degree * lam[n] * n ** spec.theta
            if abs(lfunc.lambda_coeff(spec, n)) > bound + 1e-12:
                ok = False
                break
    out.append(_entry("lambda_coeff_bound_1e4", ok, None))

    # Euler product vs continuation (p <= 1e5; sigma >= 2.5 so that the
    # truncation tail sum_{p>1e5} p^-sigma stays below the tolerance)
    worst = 0.0
    for spec in specs[:8]:
        ss = rng.uniform(2.5, 6.0, 6) + 1j * rng.uniform(-20.0, 20.0, 6)
        for sc in ss:
            ep = lfunc.euler_product(spec, complex(sc))
            cont = lfunc.evaluate(spec, complex(sc))
            worst = max(worst, abs(ep - cont))
    out.append(_entry("euler_product_vs_continuation", worst < 1e-8,
                      1e-8 - worst))

    # Dedekind factorisation
    worst = 0.0
    for D in (5, -3, -4, 12, -20):
        dd = lfunc.make_dedekind_quadratic(D)
        zz = lfunc.make_zeta()
        ll = lfunc.make_dirichlet(characters.quadratic_character(D))
        ss = rng.uniform(-1.0, 3.0, 25) + 1j * rng.uniform(-30.0, 30.0, 25)
        ss = ss[np.abs(ss - 1.0) > 0.05]
        va = lfunc.evaluate(dd, ss)
        vb = lfunc.evaluate(zz, ss) * lfunc.evaluate(ll, ss)
        worst = max(worst, float(np.max(np.abs(va - vb))))
    out.append(_entry("dedekind_factorisation", worst < 1e-10, 1e-10 - worst))

    # construction invariants across all primitive characters q <= 500
    ok = True
    for q in range(3, 501):
        for chi in characters.primitive_characters(q):
            rn = chi.root_number()
            if abs(abs(rn) - 1.0) > 1e-10:
                ok = False
        if not ok:
            break
    out.append(_entry("root_number_unimodular_q500", ok, None))
    return out


def suite_hyperbolic() -> list[dict]:
    rng = np.random.default_rng(303)
    out = []

    worst = math.inf
    for _ in range(10000):
        T = rng.uniform(-5, 5)
        a = rng.uniform(0.2, 3.0)
        w1 = rng.uniform(-3, 3) + 1j * T
        w2 = rng.uniform(-3, 3) + 1j * (T + rng.uniform(-0.99, 0.99) * a * math.pi / 4)
        worst = min(worst, hypgeo.strip_distance(w1, w2, T, a) - abs(w1 - w2) / a)
    out.append(_entry("strip_lower_bound_1e4", worst >= -1e-9, worst))

    ok = True
    worst = math.inf
    for sig0 in (1.1, 1.5, 2.0, 3.0, 5.0):
        R = hypgeo.RectangleDomain(0.0, sig0, -math.pi / 4, math.pi / 4)
        for x in np.linspace(math.log(2) / 2 + 1e-9, sig0 / 2, 50):
            d = hypgeo.rect_distance(float(x), sig0 - float(x), R)
            worst = min(worst, sig0 - d)
            ok = ok and d < sig0
    out.append(_entry("rect_crossing_bound", ok, worst))

    worst = -math.inf
    for _ in range(1000):
        z1 = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
        z2 = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
        aa = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        d0 = hypgeo.disk_distance(z1, z2)
        mob = lambda z: (z - aa) / (1 - aa.conjugate() * z)
        worst = max(worst, hypgeo.disk_distance(mob(z1), mob(z2)) - d0,
                    hypgeo.disk_distance(z1 * z1, z2 * z2) - d0)
    out.append(_entry("schwarz_pick_contraction", worst <= 1e-12, -worst))

    # strip is the long-rectangle limit
    R = hypgeo.RectangleDomain(0.0, 60.0 * math.pi / 2, -math.pi / 4, math.pi / 4)
    mid = 0.5 * 60.0 * math.pi / 2
    worst = 0.0
    for _ in range(50):
        w1 = mid + complex(rng.uniform(-1, 1), rng.uniform(-0.6, 0.6))
        w2 = mid + complex(rng.uniform(-1, 1), rng.uniform(-0.6, 0.6))
        if abs(w1 - w2) < 1e-3:
            continue
        ds = hypgeo.strip_distance(w1, w2, 0.0, 1.0)
        dr = hypgeo.rect_distance(w1, w2, R)
        worst = max(worst, abs(ds - dr) / ds)
    out.append(_entry("strip_vs_long_rectangle", worst < 0.02, 0.02 - worst))

    xs = np.linspace(1e-6, 0.936 - 1e-9, 1000)
    ok = all(hypgeo.check_tanh_inequality(float(x)) for x in xs)
    ms = np.unique(np.logspace(0, 6, 80).astype(int))
    ok2 = all(1.0 / math.tanh(1 - math.exp(-1.0 / (m + 1))) < m + 2 for m in ms)
    out.append(_entry("tanh_inequality_and_corollary", ok and ok2, None))

    ok = True
    for w in rng.uniform(-0.8, 0.8, 200) + 1j * rng.uniform(-0.8, 0.8, 200):
        if abs(w) < 1:
            ok = ok and hypgeo.check_log1p_bound(complex(w))
    out.append(_entry("log1p_bound", ok, None))

    # conformal round-trip on the unit square and a 2:1 rectangle
    worst = 0.0
    for R in (hypgeo.RectangleDomain(0, 1, 0, 1),
              hypgeo.RectangleDomain(-1, 1, 0, 1)):
        m = hypgeo.build_rect_map(R, R.center + 0.1 + 0.05j)
        zs = rng.uniform(-0.7, 0.7, 500) + 1j * rng.uniform(-0.7, 0.7, 500)
        zs = zs[np.abs(zs) < 0.999]
        back = m.forward(m.inverse(zs))
        worst = max(worst, float(np.max(np.abs(back - zs))))
    out.append(_entry("conformal_roundtrip", worst < 1e-9, 1e-9 - worst))

    kp = specfun.solve_modulus_from_ratio(1.0)
    sq = abs(math.sqrt(1 - kp * kp) - 1 / math.sqrt(2))
    out.append(_entry("square_modulus", sq < 1e-9, 1e-9 - sq))

    # instance suites
    ok = True
    for inst in hypgeo.borel_test_family():
        for (r1, r2) in ((0.3, 0.6), (0.25, 0.8)):
            ok = ok and hypgeo.check_lemma_borel(inst, r1, r2)
    out.append(_entry("borel_caratheodory_family", ok, None))

    ok = True
    for lam in (0.5, 1.0, 2.0):
        for xi in (0.25, 0.5, 0.75):
            for inst, M in hypgeo.siegel_test_family():
                ok = ok and hypgeo.check_lemma_siegel(inst, lam, xi, M, 1.0)
    out.append(_entry("siegel_rectangle_family", ok, None))

    ok = True
    for g, A, B, al, be, Q in hypgeo.rademacher_test_family(0.0, 1.0):
        ok = ok and hypgeo.check_lemma_rademacher(g, 0.0, 1.0, A, B, al, be, Q,
                                                  samples=4000)
    for g, A, B, al, be, Q in hypgeo.rademacher_test_family(-1.5, 2.5):
        ok = ok and hypgeo.check_lemma_rademacher(g, -1.5, 2.5, A, B, al, be, Q,
                                                  samples=4000)
    out.append(_entry("rademacher_interpolation_family", ok, None))
    return out


def _paper_specs() -> list[tuple[lfunc.LFunctionSpec, int, set, set]]:
    """(spec, d, J1, J2) rows for the strip-bound grid: the five working
    examples plus maximal index sets where allowed."""
    chi3 = characters.primitive_characters(3)[0]
    chi4 = characters.primitive_characters(4)[0]
    chi5 = [c for c in characters.primitive_characters(5) if c.order == 2][0]
    return [
        (lfunc.make_zeta(), 0, set(), set()),
        (lfunc.make_dirichlet(chi3), 0, {0}, set()),
        (lfunc.make_dirichlet(chi4), 0, {0}, set()),
        (lfunc.make_dirichlet(chi5), 1, set(), set()),
        (lfunc.make_dedekind_quadratic(5), 1, set(), set()),
    ]


def suite_paper() -> list[dict]:
    out = []
    for spec, d, J1, J2 in _paper_specs():
        r = paperchecks.check_lemma22(spec, d, J1, J2)
        out.append(_entry(r.name, r.passed, r.worst_margin,
                          {"witnesses": r.to_json()["witnesses"]}))

    chi3 = characters.primitive_characters(3)[0]
    chi4 = characters.primitive_characters(4)[0]
    chi5 = [c for c in characters.primitive_characters(5) if c.order == 2][0]
    lemma26_specs = [
        (lfunc.make_zeta(), 0.1),
        (lfunc.make_dirichlet(chi3), 0.1),
        (lfunc.make_dirichlet(chi4), 0.15),
        (lfunc.make_dirichlet(chi5), 0.1),
        (lfunc.make_dedekind_quadratic(5), 0.2),
        (lfunc.make_dedekind_quadratic(-3), 0.2),
    ]
    for spec, a in lemma26_specs:
        r = paperchecks.check_lemma26(spec, a, trials=1000)
        out.append(_entry(r.name, r.passed, r.worst_margin,
                          {"witnesses": r.to_json()["witnesses"]}))

    for fn in (paperchecks.check_appendix_logderiv,
               paperchecks.check_appendix_fracint,
               paperchecks.check_zeta_sandwich):
        r = fn()
        out.append(_entry(r.name, r.passed, r.worst_margin,
                          {"witnesses": r.to_json()["witnesses"]}))
    return out


SUITES = {
    "specfun": suite_specfun,
    "lfunc": suite_lfunc,
    "hyperbolic": suite_hyperbolic,
    "paper": suite_paper,
}


def run_verify(suites: list[str]) -> tuple[int, dict]:
    """Run the named invariant suites; exit status 0 iff everything passed.

    Unknown suite names raise :class:`DomainError` (a usage error at the CLI,
    exit code 2 there)."""
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s): {unknown}")
    report: dict = {"version": __version__, "suites": {}}
    ok = True
    for name in suites:
        entries = SUITES[name]()
        report["suites"][name] = entries
        ok = ok and all(e["pass"] for e in entries)
    report["pass"] = ok
    return (0 if ok else 1), report
