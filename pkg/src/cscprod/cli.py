"""Command line front end: verify, scan, export, battery.

Exit codes: 0 when every check passes, 10 + i when check i (0-based, in
report order) is the first to fail, 2 for bad or inadmissible input, and
3 when a file cannot be written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .export import FORMATS, export_samples, parse_projection
from .verify import (
    FAMILIES,
    CatalogEntry,
    GridSpec,
    Tolerances,
    classification_scan,
    run_battery,
    run_suite,
)

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FAIL_BASE = 10


def _sign(text: str) -> int:
    v = int(text)
    if v not in (-1, 1):
        raise argparse.ArgumentTypeError("epsilon must be +1 or -1")
    return v


def _entry_args(p: argparse.ArgumentParser):
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--epsilon", required=True, type=_sign)
    p.add_argument("--c", type=float)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--B", type=float)
    p.add_argument("--theta0", type=float)
    p.add_argument("--t0", type=float, default=0.0)


def _entry(ns) -> CatalogEntry:
    return CatalogEntry(ns.family, ns.epsilon, ns.c, ns.n, ns.B, ns.theta0, ns.t0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cscprod",
        description="Build and verify constant sectional curvature hypersurfaces of S^n x R and H^n x R.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every residual check on one catalog member")
    _entry_args(v)
    v.add_argument("--grid", type=int, default=16, help="grid nodes per parameter")
    v.add_argument("--points", type=int, default=24, help="grid points sampled")
    v.add_argument("--planes", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol-profile", choices=("default", "strict"), default="default")
    v.add_argument("--no-timing", action="store_true", help="omit runtime_ms for byte-identical reports")
    v.add_argument("--out", type=Path)

    s = sub.add_parser("scan", help="list the families with curvature c")
    s.add_argument("--epsilon", required=True, type=_sign)
    s.add_argument("--c", required=True, type=float)
    s.add_argument("--n", type=int)

    e = sub.add_parser("export", help="write samples (csv/json) or a mesh (obj)")
    _entry_args(e)
    e.add_argument("--format", required=True, choices=FORMATS)
    e.add_argument("--out", required=True, type=Path)
    e.add_argument("--grid", type=int, default=8)
    e.add_argument("--project", help="ambient coordinates for obj, e.g. x2,x3,x4")

    b = sub.add_parser("battery", help="run the full acceptance battery")
    b.add_argument("--out", type=Path, help="directory for per-case reports and summary.json")
    b.add_argument("--no-timing", action="store_true")
    return parser


def _cmd_verify(ns) -> int:
    grid = GridSpec(counts=ns.grid, points=ns.points, planes=ns.planes, seed=ns.seed)
    report = run_suite(_entry(ns), grid, Tolerances.profile(ns.tol_profile))
    text = report.to_json(timing=not ns.no_timing) + "\n"
    if ns.out:
        ns.out.write_text(text)
    else:
        sys.stdout.write(text)
    for c in report.checks:
        mark = "ok  " if c.passed else "FAIL"
        print(f"{mark} {c.name:<24} {c.max_residual:.3e} (tol {c.tol:.0e})", file=sys.stderr)
    i = report.first_failure()
    return 0 if i is None else EXIT_FAIL_BASE + i


def _cmd_scan(ns) -> int:
    fams = classification_scan(ns.epsilon, ns.c, ns.n)
    print(json.dumps({"epsilon": ns.epsilon, "c": ns.c, "n": ns.n, "families": fams}))
    return 0


def _cmd_export(ns) -> int:
    project = parse_projection(ns.project)
    export_samples(_entry(ns), ns.out, ns.format, ns.grid, project)
    return 0


def _cmd_battery(ns) -> int:
    results = run_battery()
    if ns.out:
        ns.out.mkdir(parents=True, exist_ok=True)
    summary = []
    for label, r in results:
        if ns.out:
            (ns.out / f"{label}.json").write_text(r.to_json(timing=not ns.no_timing) + "\n")
        i = r.first_failure()
        summary.append({"case": label, "pass": r.passed, "first_failure": None if i is None else r.checks[i].name})
        print(f"{'PASS' if r.passed else 'FAIL'} {label}")
    ok = all(s["pass"] for s in summary)
    if ns.out:
        (ns.out / "summary.json").write_text(json.dumps({"pass": ok, "cases": summary}, indent=2) + "\n")
    return 0 if ok else EXIT_FAIL_BASE


COMMANDS = {"verify": _cmd_verify, "scan": _cmd_scan, "export": _cmd_export, "battery": _cmd_battery}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return COMMANDS[ns.command](ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
