"""Command-line interface.

Subcommands:

* ``zeros``       locate critical-line zeros in a window (CSV/JSON scan dump)
* ``gaps``        annotated gap report at one or more heights T
* ``bound``       evaluate a gap-bound formula on log-scale inputs
* ``conductor``   analytic conductor of a built-in L-function at height T
* ``verify``      run invariant suites; exit 1 on any failure
* ``report``      family sweep with CSV/JSON emission

Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, gapbounds, harness, lfunc, zeroscan
from .specfun import DomainError


def _spec_from_args(args) -> lfunc.LFunctionSpec:
    if args.family == "zeta":
        return lfunc.make_zeta()
    if args.family == "dirichlet":
        if args.q is None:
            raise DomainError("--q required for the dirichlet family")
        prims = characters.primitive_characters(args.q)
        if not prims:
            raise DomainError(f"no primitive characters mod {args.q}")
        if args.char in (None, "all"):
            raise DomainError("--char INDEX required here (one character)")
        idx = int(args.char)
        if not 0 <= idx < len(prims):
            raise DomainError(
                f"character index {idx} out of range (q={args.q} has "
                f"{len(prims)} primitive characters)")
        return lfunc.make_dirichlet(prims[idx])
    if args.family == "dedekind":
        if args.D is None:
            raise DomainError("--D required for the dedekind family")
        return lfunc.make_dedekind_quadratic(args.D)
    raise DomainError(f"unknown family {args.family!r}")


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", default="zeta",
                   choices=["zeta", "dirichlet", "dedekind"])
    p.add_argument("--q", type=int, default=None, help="Dirichlet modulus")
    p.add_argument("--char", default=None,
                   help="'all' or the index of a primitive character mod q")
    p.add_argument("--D", type=int, default=None,
                   help="fundamental discriminant for the dedekind family")


def cmd_zeros(args) -> int:
    spec = _spec_from_args(args)
    scan = zeroscan.find_zeros(spec, args.t_min, args.t_max, args.step)
    if args.format == "csv":
        text = scan.to_csv()
    else:
        text = json.dumps(scan.to_json(), indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gaps(args) -> int:
    spec = _spec_from_args(args)
    scan = zeroscan.find_zeros(spec, args.t_min, args.t_max, args.step)
    lines = []
    for T in args.T:
        rep = zeroscan.gap_at(spec, scan, T)
        gapbounds.annotate_gap_report(rep, spec)
        lines.append(json.dumps(rep.to_json()))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bound(args) -> int:
    scale = gapbounds.LogScaleInput.from_kwargs(
        C=args.C, logC=args.logC, loglogC=args.loglogC)
    if args.kind == "thm1":
        res = gapbounds.thm1_bound(args.m, args.theta, scale)
    elif args.kind == "thm2":
        res = gapbounds.thm2_bound(args.m, args.theta, scale)
    else:
        res = gapbounds.classical_bounds(args.kind.replace("-", "_"), scale)
    sys.stdout.write(json.dumps(res.to_json()) + "\n")
    return 0


def cmd_conductor(args) -> int:
    spec = _spec_from_args(args)
    out = {
        "spec": spec.to_record(),
        "T": args.T,
        "conductor": lfunc.analytic_conductor(spec, args.T),
        "conductor_over_pi_m": lfunc.analytic_conductor_scaled(spec, args.T),
    }
    sys.stdout.write(json.dumps(out) + "\n")
    return 0


def cmd_verify(args) -> int:
    suites = list(harness.SUITES) if args.suite == "all" else [args.suite]
    code, report = harness.run_verify(suites)
    text = json.dumps(report, indent=1, default=str) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def cmd_report(args) -> int:
    kwargs: dict = {}
    if args.config:
        raw = harness.load_config_file(args.config)
        casts = {
            "t_min": float, "t_max": float, "step": float, "q_min": int,
            "q_max": int, "d_min": int, "d_max": int, "window": float,
            "report_step": float, "tol": float, "workers": int,
            "family": str, "char": str, "out": str, "fmt": str,
        }
        for key, val in raw.items():
            if key not in casts:
                raise DomainError(f"unknown config key {key!r}")
            kwargs[key] = casts[key](val)
    # flags win over the config file
    for key in ("family", "t_min", "t_max", "step", "q_min", "q_max",
                "d_min", "d_max", "window", "tol", "workers"):
        val = getattr(args, key, None)
        if val is not None:
            kwargs[key] = val
    if args.char is not None:
        kwargs["char"] = args.char
    if args.out is not None:
        kwargs["out"] = args.out
    if args.format is not None:
        kwargs["fmt"] = args.format
    cfg = harness.SweepConfig(**kwargs)
    report = harness.run_scan(cfg)
    if cfg.out:
        harness.emit_report(report, cfg.fmt, cfg.out)
    else:
        sys.stdout.write(json.dumps(report.to_json(), indent=1) + "\n")
    return 0 if report.summary.get("all_consistent", True) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zerogap",
        description="Zeros of classical L-functions and explicit gap bounds")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="locate critical-line zeros in a window")
    _add_spec_args(p)
    p.add_argument("--t-min", dest="t_min", type=float, default=0.0)
    p.add_argument("--t-max", dest="t_max", type=float, default=50.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(fn=cmd_zeros)

    p = sub.add_parser("gaps", help="gap report at heights T")
    _add_spec_args(p)
    p.add_argument("--T", type=float, nargs="+", required=True)
    p.add_argument("--t-min", dest="t_min", type=float, default=0.0)
    p.add_argument("--t-max", dest="t_max", type=float, default=50.0)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gaps)

    p = sub.add_parser("bound", help="evaluate a gap-bound formula")
    p.add_argument("kind", choices=["thm1", "thm2", "hall-hayman", "siegel",
                                    "littlewood"])
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--C", type=float, default=None)
    p.add_argument("--logC", type=float, default=None)
    p.add_argument("--loglogC", type=float, default=None)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("conductor", help="analytic conductor at height T")
    _add_spec_args(p)
    p.add_argument("--T", type=float, default=0.0)
    p.set_defaults(fn=cmd_conductor)

    p = sub.add_parser("verify", help="run invariant verification suites")
    p.add_argument("--suite", default="all",
                   choices=["all"] + sorted(harness.SUITES))
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="family sweep with report emission")
    p.add_argument("--config", default=None, help="key=value config file")
    p.add_argument("--family", default=None,
                   choices=["zeta", "dirichlet", "dedekind"])
    p.add_argument("--t-min", dest="t_min", type=float, default=None)
    p.add_argument("--t-max", dest="t_max", type=float, default=None)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--q-min", dest="q_min", type=int, default=None)
    p.add_argument("--q-max", dest="q_max", type=int, default=None)
    p.add_argument("--d-min", dest="d_min", type=int, default=None)
    p.add_argument("--d-max", dest="d_max", type=int, default=None)
    p.add_argument("--char", default=None)
    p.add_argument("--window", type=float, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.set_defaults(fn=cmd_report)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        ap.exit(2, f"usage error: {exc}\n")
    except (zeroscan.ContourError, gapbounds.FalsificationEvent) as exc:
        sys.stderr.write(f"check failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
