"""Command-line front door: queries, verification suites, exports, benchmark."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from .cf_engine import ConvergentTable
from .core_arith import (
    DEFAULT_BIT_BUDGET,
    LatticeError,
    OrderViolation,
    RationalLogRatio,
    validate_pair,
)
from .oracle import enumerate_sorted, naive_next
from .sequences import (
    minimal_fractional_subsequences,
    predicted_record_indices,
    verify_fg_at_convergents,
    verify_monotone_fractional_chains,
)
from .successor import GridPoint, NoPredecessor, next_point, prev_point, value
from .svg import render_tiling_svg
from .tiling import large_gap, rectangles_in_window, verify_partition

BUDGET_ENV_VAR = "LATTICE_SUCC_BIT_BUDGET"
FORMATS = ("text", "json-lines", "tsv")


@dataclass
class RunConfig:
    p1: int
    p2: int
    bit_budget: int = DEFAULT_BIT_BUDGET
    fmt: str = "text"
    params: dict = field(default_factory=dict)


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BIT_BUDGET


def _emit(records: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json-lines":
        for rec in records:
            out.write(json.dumps({c: rec[c] for c in columns}) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(columns) + "\n")
        for rec in records:
            out.write("\t".join(str(rec[c]) for c in columns) + "\n")
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in records)) if records else len(c) for c in columns}
        out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
        for rec in records:
            out.write("  ".join(str(rec[c]).ljust(widths[c]) for c in columns).rstrip() + "\n")


def _emit_point(p: GridPoint, val, fmt: str, out) -> None:
    if fmt == "text":
        suffix = f" {val}" if val is not None else ""
        out.write(f"({p.i},{p.j}){suffix}\n")
    else:
        rec = {"i": p.i, "j": p.j}
        cols = ["i", "j"]
        if val is not None:
            rec["value"] = val
            cols.append("value")
        _emit([rec], cols, fmt, out)


def _cmd_cf(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair).extend_to(cfg.params["depth"])
    records = [
        {"index": i, "quotient": table.quotient(i), "h": table.h(i), "k": table.k(i)}
        for i in range(table.depth + 1)
    ]
    if cfg.fmt == "text":
        out.write("quotients " + " ".join(str(q) for q in table.quotients) + "\n")
    _emit(records, ["index", "quotient", "h", "k"], cfg.fmt if cfg.fmt != "text" else "tsv", out)
    return 0


def _cmd_next(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair)
    p = GridPoint(cfg.params["i"], cfg.params["j"])
    q = next_point(table, p)
    _emit_point(q, value(pair, q) if cfg.params["value"] else None, cfg.fmt, out)
    return 0


def _cmd_prev(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair)
    p = GridPoint(cfg.params["i"], cfg.params["j"])
    q = prev_point(table, p)
    _emit_point(q, value(pair, q) if cfg.params["value"] else None, cfg.fmt, out)
    return 0


def _cmd_enum(cfg: RunConfig, pair, out) -> int:
    elems = enumerate_sorted(pair, cfg.params["count"])
    records = [
        {"index": idx, "i": p.i, "j": p.j, "value": v} for idx, (p, v) in enumerate(elems)
    ]
    _emit(records, ["index", "i", "j", "value"], cfg.fmt if cfg.fmt != "text" else "tsv", out)
    return 0


def _cmd_tile(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair)
    W, H = cfg.params["width"], cfg.params["height"]
    tilde = cfg.params["tilde"]
    rects = rectangles_in_window(table, W, H, tilde=tilde)
    records = [
        {
            "family": r.family,
            "level": r.level,
            "band": r.band,
            "x_min": r.x_min,
            "x_max": r.x_max,
            "y_min": r.y_min,
            "y_max": r.y_max,
        }
        for r in rects
    ]
    _emit(
        records,
        ["family", "level", "band", "x_min", "x_max", "y_min", "y_max"],
        cfg.fmt if cfg.fmt != "text" else "tsv",
        out,
    )
    svg_path = cfg.params["svg"]
    if svg_path:
        with open(svg_path, "w") as fh:
            fh.write(render_tiling_svg(rects, W, H))
    return 0


def _cmd_gaps(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair)
    family = cfg.params["family"]
    records = []
    for level in range(1 if family == "A" else 0, cfg.params["levels"] + 1):
        w = large_gap(table, level, family=family)
        records.append(
            {
                "level": w.level,
                "family": w.family,
                "i": w.point.i,
                "j": w.point.j,
                "succ_i": w.succ.i,
                "succ_j": w.succ.j,
                "gap": w.gap,
            }
        )
    _emit(
        records,
        ["level", "family", "i", "j", "succ_i", "succ_j", "gap"],
        cfg.fmt if cfg.fmt != "text" else "tsv",
        out,
    )
    return 0


def _cmd_verify(cfg: RunConfig, pair, out) -> int:
    table = ConvergentTable(pair)
    W, H = cfg.params["window"]
    scan = cfg.params["scan"]
    depth = cfg.params["depth"]
    results: list[tuple[str, bool, str]] = []

    src = verify_partition(table, W, H, tilde=False)
    results.append(("partition-source", src.ok, f"{src.rectangle_count} rectangles on {W}x{H}"))
    tld = verify_partition(table, W, H, tilde=True)
    results.append(("partition-tilde", tld.ok, f"{tld.rectangle_count} rectangles on {W}x{H}"))

    elems = enumerate_sorted(pair, scan + 1)
    mismatches = sum(
        1 for (p, _), (q, _) in zip(elems, elems[1:]) if next_point(table, p) != q
    )
    results.append(("oracle-agreement", mismatches == 0, f"{scan} successor steps, {mismatches} mismatches"))

    fg = verify_fg_at_convergents(table, depth)
    results.append(("fg-identities", fg.ok, f"{fg.checked} identities" + ("" if fg.ok else f"; {fg.failures[0]}")))

    chains = verify_monotone_fractional_chains(table, depth)
    results.append(("monotone-chains", chains.ok, f"{chains.checked} links" + ("" if chains.ok else f"; {chains.failures[0]}")))

    got = minimal_fractional_subsequences(table, scan)
    want = predicted_record_indices(table, scan)
    results.append(("record-subsequences", got == want, f"scan N={scan}"))

    all_ok = True
    for name, ok, detail in results:
        all_ok &= ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    return 0 if all_ok else 1


def _cmd_bench(cfg: RunConfig, pair, out) -> int:
    count = cfg.params["count"]
    table = ConvergentTable(pair)

    start = time.perf_counter()
    p = GridPoint(0, 0)
    cf_walk = [p]
    for _ in range(count):
        p = next_point(table, p)
        cf_walk.append(p)
    cf_seconds = time.perf_counter() - start

    start = time.perf_counter()
    q = GridPoint(0, 0)
    naive_walk = [q]
    for _ in range(count):
        q = naive_next(pair, q)
        naive_walk.append(q)
    naive_seconds = time.perf_counter() - start

    agree = cf_walk == naive_walk
    speedup = naive_seconds / cf_seconds if cf_seconds > 0 else float("inf")
    records = [
        {
            "steps": count,
            "cf_seconds": round(cf_seconds, 6),
            "naive_seconds": round(naive_seconds, 6),
            "speedup": round(speedup, 2),
            "walks_agree": agree,
        }
    ]
    _emit(
        records,
        ["steps", "cf_seconds", "naive_seconds", "speedup", "walks_agree"],
        cfg.fmt if cfg.fmt != "text" else "tsv",
        out,
    )
    return 0 if agree else 1


def _parse_window(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"window must look like 200x200, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-succ",
        description="Successor/predecessor queries in S = {p1^i * p2^j} via "
        "continued-fraction rectangle tilings, with a brute-force oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--p1", type=int, required=True, help="smaller generator (> 1)")
        p.add_argument("--p2", type=int, required=True, help="larger generator (> p1)")
        p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
        p.add_argument(
            "--bit-budget",
            type=int,
            default=_default_budget(),
            help=f"cap on power-comparison bit sizes (env {BUDGET_ENV_VAR})",
        )

    p = sub.add_parser("cf", help="partial quotients and convergent table")
    common(p)
    p.add_argument("--depth", type=int, default=10)

    for name, hlp in (("next", "successor coordinates"), ("prev", "predecessor coordinates")):
        p = sub.add_parser(name, help=hlp)
        common(p)
        p.add_argument("--i", type=int, required=True, help="exponent of p1")
        p.add_argument("--j", type=int, required=True, help="exponent of p2")
        p.add_argument("--value", action="store_true", help="also print the exact integer")

    p = sub.add_parser("enum", help="first elements of S in sorted order")
    common(p)
    p.add_argument("--count", type=int, default=20)

    p = sub.add_parser("tile", help="rectangle decomposition over a window")
    common(p)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--tilde", action="store_true", help="translated (next-number) family")
    p.add_argument("--svg", type=str, default=None, help="also write an SVG figure")

    p = sub.add_parser("gaps", help="large-gap witnesses per level")
    common(p)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--family", choices=("A", "P"), default="A")

    p = sub.add_parser("verify", help="run every property suite")
    common(p)
    p.add_argument("--window", type=_parse_window, default=(100, 100), help="WxH, e.g. 200x200")
    p.add_argument("--scan", type=int, default=500)
    p.add_argument("--depth", type=int, default=8)

    p = sub.add_parser("bench", help="CF successor walk vs fresh enumeration per query")
    common(p)
    p.add_argument("--count", type=int, default=500)

    return parser


_COMMANDS = {
    "cf": _cmd_cf,
    "next": _cmd_next,
    "prev": _cmd_prev,
    "enum": _cmd_enum,
    "tile": _cmd_tile,
    "gaps": _cmd_gaps,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "p1", "p2", "fmt", "bit_budget")
    }
    cfg = RunConfig(p1=args.p1, p2=args.p2, bit_budget=args.bit_budget, fmt=args.fmt, params=params)
    try:
        pair = validate_pair(cfg.p1, cfg.p2, cfg.bit_budget)
        return _COMMANDS[args.command](cfg, pair, out)
    except RationalLogRatio as exc:
        print(f"error: theory requires multiplicatively independent generators ({exc})", file=sys.stderr)
        return 2
    except NoPredecessor:
        print("error: no predecessor", file=sys.stderr)
        return 2
    except (OrderViolation, LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
