"""Command-line front end: graph construction, matching enumeration, Ehrhart
profiles, claim verification, and family scans, all with machine-readable
output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 inconclusive
within budget.  Data goes to stdout (or --out), progress to stderr.  Output
is byte-deterministic for identical flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from xml.sax.saxutils import escape

from . import claims, ehrhart
from .budget import Budget, BudgetExceeded
from .graphs import Graph, SubsetSpec, grid, neighbor_graph, torus
from .matchings import (enumerate_perfect_matchings, enumerate_s_matchings,
                        matching_vectors)
from .polytopes import edmond_hrep, smatching_hrep

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

BUDGET_ENV = "MATCHPOLY_BUDGET"
CUT_VERTEX_CLI_CAP = 24


class UsageError(Exception):
    pass


def _default_budget() -> float:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return 60.0
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be a number, got {raw!r}")


def _build_graph(args) -> Graph:
    if args.family == "grid":
        return grid(args.m, args.n)
    if args.family == "torus":
        return torus(args.m, args.n)
    raise UsageError(f"unknown family {args.family!r}")


def _subset_from_args(g: Graph, args) -> SubsetSpec | None:
    if getattr(args, "subset_interior", False):
        if g.shape is None:
            raise UsageError("--subset-interior needs a grid/torus graph")
        m, n = g.shape
        members = [i * n + j for i in range(1, m - 1) for j in range(1, n - 1)]
        if not members:
            raise UsageError("the interior vertex set is empty for this shape")
        return SubsetSpec.of(members)
    raw = getattr(args, "subset", None)
    if raw is None:
        return None
    try:
        members = [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise UsageError(f"--subset must be comma-separated vertex ids, got {raw!r}")
    if not members:
        raise UsageError("--subset must be nonempty")
    spec = SubsetSpec.of(members)
    spec.validate_in(g)
    return spec


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload, out_path: str | None) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=False) + "\n", out_path)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_graph(args) -> int:
    g = _build_graph(args)
    if args.format == "dot":
        _emit(g.to_dot(), args.out)
    else:
        _dump_json(g.to_json_dict(), args.out)
    return EXIT_OK


def cmd_matchings(args) -> int:
    g = _build_graph(args)
    s = _subset_from_args(g, args)
    if s is None:
        matchings = enumerate_perfect_matchings(g)
    else:
        matchings = enumerate_s_matchings(neighbor_graph(g, s))
    if args.count_only:
        _dump_json({"count": len(matchings)}, args.out)
    else:
        _dump_json({"count": len(matchings),
                    "matchings": [list(m.edge_ids) for m in matchings]},
                   args.out)
    return EXIT_OK


def cmd_profile(args) -> int:
    g = _build_graph(args)
    s = _subset_from_args(g, args)
    budget = Budget(max_seconds=args.budget)
    try:
        if s is None:
            h = edmond_hrep(g, max_cut_vertices=args.max_cut_vertices)
            vecs = matching_vectors(enumerate_perfect_matchings(g))
        else:
            ng = neighbor_graph(g, s)
            h = smatching_hrep(ng)
            vecs = matching_vectors(enumerate_s_matchings(ng))
        p = ehrhart.profile(h, vecs, budget=budget)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    _dump_json(p.to_json_dict(), args.out)
    return EXIT_OK


CHECK_NAMES = ("classification", "min-bridges", "shift-injection",
               "dimensions", "regular-gorenstein", "cut-bound",
               "smatching-exactness", "witness")


def _run_single_check(args) -> list[claims.VerificationReport]:
    budget = Budget(max_seconds=args.budget)
    name = args.check
    if name != "dimensions" and (args.m is None or args.n is None):
        raise UsageError(f"--check {name} needs --m and --n")
    if name == "classification":
        return [claims.check_torus_classification(args.m, args.n, budget=budget)]
    if name == "min-bridges":
        return [claims.check_min_bridges(args.m, args.n, budget=budget)]
    if name == "shift-injection":
        g = _build_graph(args)
        return [claims.check_shift_injection(g, args.k, args.level,
                                             budget=budget)]
    if name == "dimensions":
        return [claims.check_dimension_formulas(budget=budget)]
    if name == "witness":
        w = claims.witness(args.kind, args.m, args.n)
        return [claims.check_witness(w, budget=budget)]
    g = _build_graph(args)
    s = _subset_from_args(g, args)
    if s is None:
        raise UsageError(f"--check {name} needs --subset or --subset-interior")
    if name == "regular-gorenstein":
        return [claims.check_regular_smatching_gorenstein(g, s, budget=budget)]
    if name == "cut-bound":
        return [claims.check_odd_cut_bound(g, s, args.t_max, budget=budget)]
    if name == "smatching-exactness":
        return [claims.check_smatching_exactness(g, s, t_max=args.t_max,
                                                 budget=budget)]
    raise UsageError(f"unknown check {name!r}")


def _junit_xml(reports) -> str:
    fails = sum(1 for r in reports if r.verdict == "fail")
    lines = [f'<testsuite name="matchpoly" tests="{len(reports)}" '
             f'failures="{fails}">']
    for r in reports:
        t = f'  <testcase classname="matchpoly.claims" name="{escape(r.check_id)}" time="{r.runtime_s:.3f}"'
        if r.verdict == "pass":
            lines.append(t + "/>")
        elif r.verdict == "fail":
            lines.append(t + ">")
            lines.append(f'    <failure message="{escape(r.claim)}">'
                         f'{escape(json.dumps(r.computed))}</failure>')
            lines.append("  </testcase>")
        else:
            lines.append(t + ">")
            lines.append(f'    <skipped message="{escape(r.verdict)}"/>')
            lines.append("  </testcase>")
    lines.append("</testsuite>")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.all:
        reports = claims.default_battery(budget_s=args.budget)
    elif args.check:
        reports = _run_single_check(args)
    else:
        raise UsageError("verify needs --check NAME or --all")
    for r in reports:
        print(f"[{r.verdict}] {r.check_id} ({r.runtime_s:.2f}s)",
              file=sys.stderr)
    _dump_json([r.to_json_dict() for r in reports], args.out)
    if args.junit:
        with open(args.junit, "w", encoding="utf-8") as fh:
            fh.write(_junit_xml(reports))
    if any(r.verdict == "fail" for r in reports):
        return EXIT_FAIL
    if any(r.verdict == "inconclusive" for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


@dataclass
class ScanConfig:
    family: str
    m_range: tuple[int, int]
    n_range: tuple[int, int]
    parity: str = "any"          # parity filter on m*n
    budget_s: float = 60.0
    jobs: int = 1
    fmt: str = "json"
    out: str | None = None

    def instances(self) -> list[tuple[int, int]]:
        out = []
        for m in range(self.m_range[0], self.m_range[1] + 1):
            for n in range(self.n_range[0], self.n_range[1] + 1):
                if self.parity == "even" and (m * n) % 2 != 0:
                    continue
                if self.parity == "odd" and (m * n) % 2 != 1:
                    continue
                out.append((m, n))
        return out


def scan_instance(family: str, m: int, n: int, budget_s: float) -> dict:
    """One scan row: construction data, dimension, and for tori the
    classification verdict against the closed-form predicate."""
    import time as _time
    t0 = _time.perf_counter()
    g = grid(m, n) if family == "grid" else torus(m, n)
    row: dict = {"family": family, "m": m, "n": n,
                 "vertices": g.n_vertices, "edges": g.n_edges}
    matchings = enumerate_perfect_matchings(g)
    row["matchings"] = len(matchings)
    if matchings:
        row["dim"] = claims.dimension_from_vertices(matching_vectors(matchings))
    else:
        row["dim"] = -1
    if family == "grid":
        row["dim_formula"] = (m - 1) * (n - 1) if matchings else -1
        row["status"] = "ok" if row["dim"] == row["dim_formula"] else "fail"
    else:
        pred = claims.torus_gorenstein_predicate(m, n)
        row["predicate"] = pred
        rep = claims.check_torus_classification(
            m, n, budget=Budget(max_seconds=budget_s))
        row["gorenstein"] = rep.computed.get("gorenstein")
        row["status"] = ("ok" if rep.verdict == "pass" else
                         "n/a" if rep.verdict == "not_applicable" else
                         rep.verdict)
    row["runtime_s"] = round(_time.perf_counter() - t0, 3)
    return row


def _scan_rows(cfg: ScanConfig) -> list[dict]:
    inst = cfg.instances()
    if cfg.jobs > 1 and len(inst) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futs = {(m, n): pool.submit(scan_instance, cfg.family, m, n,
                                        cfg.budget_s) for (m, n) in inst}
            rows = [futs[key].result() for key in sorted(futs)]
    else:
        rows = [scan_instance(cfg.family, m, n, cfg.budget_s)
                for (m, n) in sorted(inst)]
    return rows


def _rows_to_csv(rows: list[dict]) -> str:
    import csv
    import io
    cols: list[str] = []
    for row in rows:
        for k in row:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols)
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def cmd_scan(args) -> int:
    cfg = ScanConfig(family=args.family, m_range=_parse_range(args.m_range),
                     n_range=_parse_range(args.n_range), parity=args.parity,
                     budget_s=args.budget, jobs=args.jobs, fmt=args.format,
                     out=args.out)
    rows = _scan_rows(cfg)
    if cfg.fmt == "csv":
        _emit(_rows_to_csv(rows), cfg.out)
    else:
        _dump_json(rows, cfg.out)
    if any(r["status"] == "fail" for r in rows):
        return EXIT_FAIL
    if any(r["status"] == "inconclusive" for r in rows):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _parse_range(raw: str) -> tuple[int, int]:
    try:
        if ":" in raw:
            lo, hi = raw.split(":")
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(raw)
    except ValueError:
        raise UsageError(f"range must be N or LO:HI, got {raw!r}")
    if hi_i < lo_i:
        raise UsageError(f"empty range {raw!r}")
    return lo_i, hi_i


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _positive_int(raw: str) -> int:
    v = int(raw)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matchpoly",
        description="matching polytopes of grids and tori: construction, "
                    "lattice-point counting, Gorenstein verdicts, claim "
                    "verification")
    sub = p.add_subparsers(dest="command", required=True)

    def add_graph_flags(sp, need_graph=True):
        sp.add_argument("--family", choices=("grid", "torus"),
                        required=need_graph)
        sp.add_argument("--m", type=_positive_int, required=need_graph)
        sp.add_argument("--n", type=_positive_int, required=need_graph)

    def add_common(sp):
        sp.add_argument("--out", default=None, help="write output here "
                        "instead of stdout")
        sp.add_argument("--budget", type=float, default=None,
                        help=f"seconds per instance (default ${BUDGET_ENV} "
                             f"or 60)")

    sp = sub.add_parser("graph", help="emit a graph as JSON or DOT")
    add_graph_flags(sp)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("matchings", help="enumerate perfect or S-matchings")
    add_graph_flags(sp)
    sp.add_argument("--subset", default=None,
                    help="comma-separated vertex ids for an S-matching run")
    sp.add_argument("--subset-interior", action="store_true",
                    help="use the interior vertices as S")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_matchings)

    sp = sub.add_parser("profile", help="full Ehrhart profile as JSON")
    add_graph_flags(sp)
    sp.add_argument("--subset", default=None)
    sp.add_argument("--subset-interior", action="store_true")
    sp.add_argument("--max-cut-vertices", type=int, default=CUT_VERTEX_CLI_CAP)
    add_common(sp)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("verify", help="run claim verifications")
    sp.add_argument("--check", choices=CHECK_NAMES, default=None)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--family", choices=("grid", "torus"), default="torus")
    sp.add_argument("--m", type=_positive_int, default=None)
    sp.add_argument("--n", type=_positive_int, default=None)
    sp.add_argument("--k", type=_positive_int, default=3,
                    help="strict level for shift-injection")
    sp.add_argument("--level", type=_positive_int, default=1,
                    help="source dilation for shift-injection")
    sp.add_argument("--t-max", type=_positive_int, default=3)
    sp.add_argument("--kind", default="interior-2x3",
                    help="witness kind for --check witness")
    sp.add_argument("--subset", default=None)
    sp.add_argument("--subset-interior", action="store_true")
    sp.add_argument("--junit", default=None,
                    help="also write a JUnit XML report here")
    add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="sweep a family and tabulate verdicts")
    sp.add_argument("--family", choices=("grid", "torus"), required=True)
    sp.add_argument("--m-range", required=True, help="N or LO:HI")
    sp.add_argument("--n-range", required=True, help="N or LO:HI")
    sp.add_argument("--parity", choices=("any", "even", "odd"), default="any",
                    help="keep instances by parity of m*n")
    sp.add_argument("--jobs", type=_positive_int, default=1)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    add_common(sp)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else EXIT_OK
    try:
        if getattr(args, "budget", None) is None and hasattr(args, "budget"):
            args.budget = _default_budget()
        if hasattr(args, "m") and hasattr(args, "n"):
            needs_mn = args.command in ("graph", "matchings", "profile", "scan")
            if needs_mn and (args.m is None or args.n is None):
                raise UsageError("--m and --n are required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
