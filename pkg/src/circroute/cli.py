"""Command line: ``circroute report|verify|sweep|route|colour``.

Exit status is 0 on success, 1 when an invariant check fails and 2 for
bad parameters.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from . import bounds
from .errors import ConsistencyError, DomainError
from .graph import build
from .report import SUITES, build_report, fmt, run_suites, to_json, to_table
from .routing import DEFAULT_EXHAUSTIVE_CEILING, build_routing, load_profile, lemma7_formula
from .wavelength import colour_count_formula, colour_routing

SCHEMA = "# circroute-schema v1"
COLUMNS = (
    "n", "s", "q", "r", "status",
    "max_arc_load", "max_edge_load", "closed_form_max_arc",
    "theorem1_case", "pi_lower", "pi_lower_tag", "pi_upper", "pi_arc_lower", "pi_arc_upper",
    "theorem4_case", "regime", "sumf", "w_arc_upper",
    "arc_colours", "edge_colours",
    "forwarding_ratio", "optical_ratio",
    "routing_ok", "lattice_ok", "colouring_ok",
)


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _s_policy(text: str) -> list[int] | None:
    if text == "all":
        return None
    try:
        return sorted({int(t) for t in text.split(",") if t})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'all' or S1,S2,..., got {text!r}") from None


def sweep_pairs(lo: int, hi: int, s_list: list[int] | None) -> list[tuple[int, int]]:
    out = []
    for n in range(max(lo, 5), hi + 1):
        for s in (s_list if s_list is not None else range(2, n)):
            if 1 < s and 2 * s < n:
                out.append((n, s))
    return out


def sweep_row(args: tuple[int, int, int]) -> dict:
    """One CSV row; failures land in ``status`` instead of raising."""
    n, s, max_exhaustive = args
    row: dict = {"n": n, "s": s}
    try:
        g = build(n, s)
        row.update(q=g.q, r=g.r)
        exhaustive = n <= max_exhaustive
        rt = build_routing(g)
        profile = load_profile(rt, verify=False)
        pi_arc, pi = bounds.theorem1_bracket(g, max_exhaustive)
        count = colour_count_formula(g)
        counts = None
        if exhaustive:
            counts = (
                colour_routing(g, rt, "arc", strict=False).distinct_count,
                colour_routing(g, rt, "edge", strict=False).distinct_count,
            )
        w_arc, _ = bounds.theorem4_bracket(g, max_exhaustive, colour_counts=counts)
        diag = bounds.ratio_diagnostics(g, max_exhaustive, counts[0] if counts else None)
        row.update(
            max_arc_load=profile.max_arc_load,
            max_edge_load=profile.max_edge_load,
            closed_form_max_arc=lemma7_formula(g),
            theorem1_case=pi.case,
            pi_lower=fmt(pi.lower.value),
            pi_lower_tag=pi.lower.tag,
            pi_upper=fmt(pi.upper.value),
            pi_arc_lower=fmt(pi_arc.lower.value),
            pi_arc_upper=fmt(pi_arc.upper.value),
            theorem4_case=w_arc.case,
            regime=count.regime,
            sumf=count.sumf,
            w_arc_upper=fmt(w_arc.upper.value),
            arc_colours=counts[0] if counts else "skipped",
            edge_colours=counts[1] if counts else "skipped",
            forwarding_ratio=f"{float(diag.forwarding_ratio):.6f}",
            optical_ratio=f"{float(diag.optical_ratio):.6f}" if diag.optical_ratio is not None else "skipped",
        )
        status = "ok"
        if exhaustive:
            for res in run_suites(g):
                row[f"{res.name}_ok"] = res.passed
                if not res.passed and status == "ok":
                    status = f"fail:{res.name}: {res.counterexample}"
        else:
            row.update(routing_ok="skipped", lattice_ok="skipped", colouring_ok="skipped")
        row["status"] = status
    except (DomainError, ConsistencyError) as exc:
        row["status"] = f"error: {exc}"
    return row


def _rows(pairs: Sequence[tuple[int, int]], jobs: int, max_exhaustive: int) -> Iterable[dict]:
    work = [(n, s, max_exhaustive) for n, s in pairs]
    if jobs <= 1:
        yield from map(sweep_row, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so rows stay lexicographic
        yield from pool.map(sweep_row, work, chunksize=4)


def cmd_report(a) -> int:
    g = build(a.n, a.s)
    doc = build_report(g, a.max_exhaustive)
    sys.stdout.write(to_json(doc) if a.format == "json" else to_table(doc))
    return 0


def cmd_verify(a) -> int:
    g = build(a.n, a.s)
    if g.n > a.max_exhaustive:
        raise DomainError(f"n={g.n} above the exhaustive ceiling {a.max_exhaustive}")
    suites = SUITES if a.suite == "all" else (a.suite,)
    failed = False
    for res in run_suites(g, suites, verbatim=a.verbatim):
        print(f"{res.name:<10} {'pass' if res.passed else 'FAIL'}")
        for note in res.notes:
            print(f"    {note}")
        if not res.passed:
            failed = True
            print(f"    counterexample: {res.counterexample}")
    return 1 if failed else 0


def cmd_sweep(a) -> int:
    lo, hi = a.n
    pairs = sweep_pairs(lo, hi, a.s)
    try:
        fh = open(a.out, "w", newline="") if a.out != "-" else sys.stdout
    except OSError as exc:
        print(f"cannot write {a.out}: {exc.strerror}", file=sys.stderr)
        return 2
    bad = 0
    try:
        fh.write(SCHEMA + "\n")
        writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for k, row in enumerate(_rows(pairs, a.jobs, a.max_exhaustive), start=1):
            writer.writerow(row)
            fh.flush()
            bad += row["status"] != "ok"
            print(f"\r{k}/{len(pairs)} n={row['n']} s={row['s']}", end="", file=sys.stderr)
        print(f"\n{len(pairs)} rows, {bad} not ok", file=sys.stderr)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 1 if bad else 0


def cmd_route(a) -> int:
    g = build(a.n, a.s)
    for v in (a.source, a.target):
        if not 0 <= v < g.n:
            raise DomainError(f"node {v} outside [0, {g.n})")
    rt = build_routing(g)
    p = rt.path(a.source, a.target)
    i, j = rt.path_class(a.source, a.target)
    print(" -> ".join(map(str, p.nodes)))
    print(f"class ({i}, {j}), {len(p)} links")
    return 0


def cmd_colour(a) -> int:
    g = build(a.n, a.s)
    if g.n > a.max_exhaustive:
        raise DomainError(f"n={g.n} above the exhaustive ceiling {a.max_exhaustive}")
    res = colour_routing(g, variant=a.variant, verbatim=a.verbatim, strict=False)
    print("x\ty\tclass\tcolour")
    for x in range(g.n):
        for d in range(1, g.n):
            y = (x + d) % g.n
            c = res.colour(x, y)
            i, j = (int(v) for v in res.classes[d - 1])
            sign = "-" if c.sign < 0 else ""
            print(f"{x}\t{y}\t({i},{j})\t{sign}({c.c1},{c.c2},{c.c3})")
    print(f"# {a.variant} colours: {res.distinct_count}")
    if res.conflict is not None:
        c = res.conflict
        print(f"# conflict on link {c.link}: paths {c.first} and {c.second} share {tuple(c.colour)}")
        return 1
    print("# conflict-free")
    return 0


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circroute", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def instance(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)

    def ceiling(sp):
        sp.add_argument("--max-exhaustive", type=int, default=DEFAULT_EXHAUSTIVE_CEILING,
                        help="largest n for brute-force checks (default %(default)s)")

    sp = sub.add_parser("report", help="bounds, loads and colour counts for one instance")
    instance(sp)
    ceiling(sp)
    sp.add_argument("--format", choices=("json", "table"), default="table")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("verify", help="run the invariant suites on one instance")
    instance(sp)
    ceiling(sp)
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--verbatim", action="store_true", help="use the unrepaired colouring rules")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="CSV over a range of instances")
    sp.add_argument("--n", type=_range, required=True, metavar="A..B")
    sp.add_argument("--s", type=_s_policy, default=None, metavar="all|S1,S2,...")
    sp.add_argument("--out", required=True, help="output file, or - for stdout")
    sp.add_argument("--jobs", type=int, default=1)
    ceiling(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("route", help="print the routed path between two nodes")
    instance(sp)
    sp.add_argument("--from", dest="source", type=int, required=True)
    sp.add_argument("--to", dest="target", type=int, required=True)
    sp.set_defaults(func=cmd_route)

    sp = sub.add_parser("colour", help="print every path colour and check for conflicts")
    instance(sp)
    ceiling(sp)
    sp.add_argument("--variant", choices=("arc", "edge"), default="arc")
    sp.add_argument("--verbatim", action="store_true", help="use the unrepaired colouring rules")
    sp.set_defaults(func=cmd_colour)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    a = parser().parse_args(argv)
    try:
        return a.func(a)
    except DomainError as exc:
        print(f"circroute: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"circroute: invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
