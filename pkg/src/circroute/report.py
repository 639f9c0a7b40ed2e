"""Per-instance reports and verification suites.

A report gathers loads, bound brackets, colour counts and ratios for one
``(n, s)`` into a plain nested dict with a fixed key order, so the same
instance always serialises to the same bytes.  Anything that needs the
exhaustive enumeration (BFS sums, per-arc loads, colouring checks) is only
done up to ``max_exhaustive`` nodes and marked ``"skipped"`` beyond that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import bounds, lattice
from .errors import ConsistencyError
from .graph import CirculantGraph, distance_sum_from_zero, distances_from
from .routing import (
    DEFAULT_EXHAUSTIVE_CEILING,
    base_class,
    build_routing,
    lemma7_formula,
    lemma8_upper_bound,
    load_profile,
)
from .wavelength import colour_count_formula, colour_routing, path_class, regime_formula

SKIPPED = "skipped"
SUITES = ("routing", "lattice", "colouring")


def rational(value) -> Any:
    """JSON form of a number: exact ``num/den`` when rational."""
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator, "approx": float(value)}
    return {"approx": float(value)}


def fmt(value) -> str:
    """Short text form: ``p/q`` for rationals, six significant digits otherwise."""
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


@dataclass
class SuiteResult:
    name: str
    passed: bool
    notes: list[str] = field(default_factory=list)
    counterexample: str | None = None


def verify_routing(g: CirculantGraph) -> SuiteResult:
    res = SuiteResult("routing", True)
    rt = build_routing(g)
    try:
        for d, p in enumerate(rt.base_paths, start=1):
            if p.source != 0 or p.destination != d:
                raise ConsistencyError(f"base path to {d} ends at {p.destination}")
            if path_class(g, p) != base_class(g, d):
                raise ConsistencyError(f"base path to {d} has class {path_class(g, p)}, "
                                       f"expected {base_class(g, d)}")
        profile = load_profile(rt, verify=True)
        closed = lemma7_formula(g)
        if profile.max_arc_load != closed:
            raise ConsistencyError(f"max arc load {profile.max_arc_load} != closed form {closed}")
        l8 = lemma8_upper_bound(g)
        if profile.max_arc_load > l8.value:
            raise ConsistencyError(f"max arc load {profile.max_arc_load} above case {l8.case} bound {l8.value}")
        res.notes.append(f"max arc load {profile.max_arc_load}, max edge load {profile.max_edge_load}")
    except ConsistencyError as exc:
        res.passed, res.counterexample = False, str(exc)
    return res


def verify_lattice(g: CirculantGraph) -> SuiteResult:
    res = SuiteResult("lattice", True)
    try:
        total = distance_sum_from_zero(g)
        floor_bound = lattice.distance_sum_lower_bound(g)
        if floor_bound is not None and total < floor_bound:
            raise ConsistencyError(f"distance sum {total} below {floor_bound}")
        exact = lattice.sqrt_case_distance_sum(g)
        if exact is not None and total != exact:
            raise ConsistencyError(f"distance sum {total} != {exact} in the square case")
        basis = lattice.packed_basis(g)
        if basis is None:
            res.notes.append("packed basis: NotApplicable, skipped corner-distance")
            return res
        bfs = distances_from(g, 0)
        for target in range(g.n):
            got = lattice.corner_distance(g, basis, target)
            if got != bfs[target]:
                raise ConsistencyError(
                    f"node {target}: corner distance {got} != BFS distance {bfs[target]}"
                )
        res.notes.append(f"packed basis {basis.case_tag}: a={tuple(basis.a)}, b={tuple(basis.b)}")
    except ConsistencyError as exc:
        res.passed, res.counterexample = False, str(exc)
    return res


def verify_colouring(g: CirculantGraph, verbatim: bool = False) -> SuiteResult:
    res = SuiteResult("colouring", True)
    rt = build_routing(g)
    try:
        arc = colour_routing(g, rt, "arc", verbatim)
        edge = colour_routing(g, rt, "edge", verbatim)
        count = colour_count_formula(g)
        if arc.distinct_count > count.sumf:
            raise ConsistencyError(f"{arc.distinct_count} arc colours exceed palette {count.sumf}")
        if edge.distinct_count > 2 * arc.distinct_count:
            raise ConsistencyError(f"{edge.distinct_count} edge colours exceed twice the arc count")
        max_arc = load_profile(rt, verify=False).max_arc_load
        if arc.distinct_count < max_arc:
            raise ConsistencyError(f"{arc.distinct_count} arc colours below max arc load {max_arc}")
        res.notes.append(
            f"arc colours {arc.distinct_count}, edge colours {edge.distinct_count}, palette {count.sumf}"
        )
    except ConsistencyError as exc:
        res.passed, res.counterexample = False, str(exc)
    return res


def run_suites(g: CirculantGraph, suites=SUITES, verbatim: bool = False) -> list[SuiteResult]:
    runners = {
        "routing": verify_routing,
        "lattice": verify_lattice,
        "colouring": lambda g: verify_colouring(g, verbatim),
    }
    return [runners[name](g) for name in suites]


def _bound(b: bounds.Bound) -> dict:
    return {"value": rational(b.value), "tag": b.tag}


def _bracket(rep: bounds.BoundReport) -> dict:
    return {
        "lower": _bound(rep.lower),
        "upper": _bound(rep.upper),
        "case": rep.case,
        "achieved": rep.achieved if rep.achieved is not None else SKIPPED,
        "ratio": rational(rep.ratio),
        "tight": rep.tight,
    }


def build_report(
    g: CirculantGraph,
    max_exhaustive: int = DEFAULT_EXHAUSTIVE_CEILING,
    verify: bool = True,
) -> dict:
    """Everything known about one instance, as an ordered JSON-ready dict."""
    exhaustive = g.n <= max_exhaustive
    rt = build_routing(g)
    profile = load_profile(rt, verify=exhaustive)
    l8 = lemma8_upper_bound(g)

    arc_colours = edge_colours = None
    if exhaustive:
        arc_colours = colour_routing(g, rt, "arc").distinct_count
        edge_colours = colour_routing(g, rt, "edge").distinct_count
    count = colour_count_formula(g)
    original = regime_formula(g, verbatim=True)

    pi_arc, pi = bounds.theorem1_bracket(g, max_exhaustive)
    counts = (arc_colours, edge_colours) if exhaustive else None
    w_arc, w = bounds.theorem4_bracket(g, max_exhaustive, colour_counts=counts)
    diag = bounds.ratio_diagnostics(g, max_exhaustive, arc_colours)

    doc: dict[str, Any] = {
        "instance": {"n": g.n, "s": g.s, "q": g.q, "r": g.r},
        "routing": {
            "ring_cw": profile.ring_cw,
            "ring_acw": profile.ring_acw,
            "skip_cw": profile.skip_cw,
            "skip_acw": profile.skip_acw,
            "max_arc": profile.max_arc_load,
            "max_edge": profile.max_edge_load,
            "closed_form_max_arc": lemma7_formula(g),
            "case_bound": {"case": l8.case, "value": rational(l8.value)},
            "brute_force_checked": profile.brute_force_checked,
        },
        "bounds": {
            "pi": _bracket(pi),
            "pi_arc": _bracket(pi_arc),
            "w": _bracket(w),
            "w_arc": _bracket(w_arc),
            "lower_candidates": {b.tag: rational(b.value) for b in bounds.lower_bounds(g, max_exhaustive)},
        },
        "colours": {
            "arc": arc_colours if exhaustive else SKIPPED,
            "edge": edge_colours if exhaustive else SKIPPED,
            "sumf": count.sumf,
            "case_formula": rational(count.case_formula),
            "original_case_formula": rational(original),
            "regime": count.regime,
        },
        "diagnostics": {
            "forwarding_ratio": rational(diag.forwarding_ratio),
            "optical_ratio": rational(diag.optical_ratio) if diag.optical_ratio is not None else SKIPPED,
            "corollary1_applicable": diag.corollary1_applicable,
            "corollary2_applicable": diag.corollary2_applicable,
            "mean_distance_raw": rational(bounds.lower_mean_distance_raw(g)),
        },
    }
    if verify and exhaustive:
        doc["verification"] = {r.name: r.passed for r in run_suites(g)}
    else:
        doc["verification"] = SKIPPED
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_table(doc: dict) -> str:
    inst = doc["instance"]
    lines = [f"C_{inst['n']}(1,{inst['s']})  q={inst['q']} r={inst['r']}", ""]
    rt = doc["routing"]
    lines.append(
        "loads      ring cw {ring_cw}  ring acw {ring_acw}  skip cw {skip_cw}  skip acw {skip_acw}".format(**rt)
    )
    lines.append(f"max load   arc {rt['max_arc']}  edge {rt['max_edge']}")
    lines.append("")

    def show(v):
        if isinstance(v, dict):
            if "num" in v:
                return str(v["num"]) if v["den"] == 1 else f"{v['num']}/{v['den']}"
            return f"{v['approx']:.6g}"
        return str(v)

    for target in ("pi", "pi_arc", "w", "w_arc"):
        b = doc["bounds"][target]
        mark = "TIGHT" if b["tight"] else f"ratio {show(b['ratio'])}" if b["ratio"] else ""
        lines.append(
            f"{target:<7}[{show(b['lower']['value'])}, {show(b['upper']['value'])}]"
            f"  lower:{b['lower']['tag']} upper:{b['upper']['tag']}"
            f"  achieved {show(b['achieved'])}  {mark}".rstrip()
        )
    lines.append("")
    col = doc["colours"]
    lines.append(
        f"colours    arc {col['arc']}  edge {col['edge']}  palette {col['sumf']} ({col['regime']})"
    )
    diag = doc["diagnostics"]
    lines.append(
        f"ratios     forwarding {show(diag['forwarding_ratio'])}  optical {show(diag['optical_ratio'])}"
    )
    ver = doc["verification"]
    if isinstance(ver, dict):
        lines.append("verified   " + "  ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in ver.items()))
    else:
        lines.append(f"verified   {ver}")
    return "\n".join(lines) + "\n"
