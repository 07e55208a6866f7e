"""Command line front end.

Subcommands build the complexes, run the requested verifications and
print one JSON report on stdout.  Reports are deterministic for fixed
inputs and flags; timing goes to stderr.  Exit codes: 0 all requested
verifications passed, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import tables
from .anti_rips import (
    PointSet,
    anti_rips_complex,
    grid_connectivity_bound,
    line_homotopy,
    scale_sweep,
)
from .complexes import HomotopyType, complex_to_obj, is_shelling, reduced_euler
from .errors import ParseError, ToolkitError
from .forests import (
    dag_contractibility_report,
    dag_euler_characteristic,
    dag_homotopy_type,
    forest_complex,
    rooted_forest_complex,
    shelling_order,
)
from .graphs import is_acyclic, parse_directed, parse_undirected
from .homology import betti, homological_connectivity, matches
from .independence import (
    clique_extension_faces,
    clique_neighborhood_faces,
    cycle_family_faces,
    cycle_power_graph,
    fold_reduce,
    independence_complex,
    max_degree_connectivity_bound,
    path_family_faces,
    path_power_graph,
    verify_generating_faces,
    _decompose,
)
from .graphs import remove_vertices

SCHEMA = "gctk-report/1"


# --- serialisation helpers --------------------------------------------------


def _canon(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, frozenset):
        return [_canon(v) for v in sorted(value)]
    if isinstance(value, (tuple, list)):
        return [_canon(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _canon(v) for k, v in value.items()}
    return value


def _homotopy_obj(h: HomotopyType) -> dict:
    if h.empty:
        return {"empty": True}
    return {"empty": False, "spheres": list(h.spheres), "describe": h.describe()}


def _betti_obj(b) -> object:
    return {"empty": True} if b.empty else list(b.entries)


def _faces_obj(faces) -> list:
    return [sorted(_canon(f)) for f in faces]


def _digest(obj) -> str:
    return hashlib.sha256(
        json.dumps(_canon(obj), sort_keys=True).encode()).hexdigest()[:16]


def _json_default(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (frozenset, set, tuple)):
        return _canon(value)
    raise TypeError(f"not JSON serialisable: {value!r}")


def _render(report: dict, pretty: bool) -> str:
    if not pretty:
        return json.dumps(report, sort_keys=True, default=_json_default)
    lines = [f"{report['command']}  [{report['schema']}]"]
    for key, value in sorted(report.items()):
        if key in ("command", "schema", "checks"):
            continue
        lines.append(f"  {key}: {json.dumps(value, sort_keys=True, default=_json_default)}")
    for check in report.get("checks", []):
        mark = "ok " if check["pass"] else "FAIL"
        lines.append(f"  [{mark}] {check['name']}: {json.dumps(check.get('detail'), default=_json_default)}")
    return "\n".join(lines)


def _check(name: str, ok: bool, detail=None) -> dict:
    return {"name": name, "pass": bool(ok), "detail": _canon(detail)}


# --- input loading ----------------------------------------------------------


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _parse_label(token: str):
    return int(token) if token.lstrip("-").isdigit() else token


def _family_graph(code: str):
    parts = code.split(":")
    if len(parts) != 3 or parts[0] not in ("L", "C"):
        raise ParseError(f"expected L:n:k or C:n:k, got {code!r}")
    n, k = int(parts[1]), int(parts[2])
    graph = path_power_graph(n, k) if parts[0] == "L" else cycle_power_graph(n, k)
    return parts[0], n, k, graph


def _family_points(code: str) -> PointSet:
    parts = code.split(":")
    if len(parts) != 3 or parts[0] != "grid":
        raise ParseError(f"expected grid:a:b, got {code!r}")
    a, b = int(parts[1]), int(parts[2])
    return PointSet("grid", tuple((i, j) for i in range(a) for j in range(b)))


# --- subcommands ------------------------------------------------------------


def run_dt(args) -> dict:
    g = parse_directed(_read(args.input))
    report: dict = {
        "schema": SCHEMA,
        "command": "dt",
        "inputs": {"digest": _digest([list(g.vertices), list(g.edges)])},
        "checks": [],
    }
    if args.roots:
        roots = frozenset(_parse_label(t) for t in args.roots.split(","))
        complex_ = rooted_forest_complex(g, roots)
        report["roots"] = sorted(_canon(roots))
        if args.shelling:
            order = shelling_order(g, roots)
            verdict = is_shelling(complex_, order)
            report["shelling_order"] = _faces_obj(order)
            report["checks"].append(_check("shelling-order-accepted", verdict.ok,
                                           {"witness": verdict.witness}))
    else:
        complex_ = forest_complex(g)
    report["complex"] = complex_to_obj(complex_)
    b = betti(complex_)
    report["betti"] = _betti_obj(b)
    if args.euler:
        formula = dag_euler_characteristic(g)  # CyclicGraph/NoEdges surface as input errors
        direct = reduced_euler(complex_ if not args.roots else forest_complex(g))
        report["euler"] = {"formula": formula, "direct": direct}
        report["checks"].append(_check("euler-formula", formula == direct,
                                       {"formula": formula, "direct": direct}))
    if args.verify and not args.roots:
        if is_acyclic(g):
            h = dag_homotopy_type(g)
            verdict = matches(forest_complex(g), h)
            report["homotopy"] = _homotopy_obj(h)
            report["checks"].append(_check("homotopy-matches-oracle", verdict.ok,
                                           {"expected": verdict.expected,
                                            "actual": verdict.actual}))
            contr = dag_contractibility_report(g) if g.edges else None
            if contr is not None:
                report["checks"].append(_check("contractibility-statements-agree",
                                               contr.all_agree(),
                                               {"contractible": contr.contractible}))
        else:
            report["checks"].append(_check("acyclic", False, "graph has a directed cycle"))
    return report


def run_ind(args) -> dict:
    family = None
    if args.family:
        family = _family_graph(args.family)
        g = family[3]
        digest_src = args.family
    else:
        if not args.input:
            raise ParseError("ind needs an input file or --family")
        g = parse_undirected(_read(args.input))
        digest_src = [list(g.vertices), list(g.edges)]
    report: dict = {
        "schema": SCHEMA,
        "command": "ind",
        "inputs": {"digest": _digest(digest_src)},
        "checks": [],
    }
    complex_ = independence_complex(g)
    report["complex"] = complex_to_obj(complex_)
    base_betti = betti(complex_)
    report["betti"] = _betti_obj(base_betti)

    if args.fold:
        reduced, steps = fold_reduce(g)
        report["fold"] = {
            "steps": [{"kept": _canon(s.kept), "removed": _canon(s.removed)} for s in steps],
            "reduced_vertices": _canon(list(reduced.vertices)),
            "reduced_edges": _canon(list(reduced.edges)),
        }
        if args.verify:
            after = betti(independence_complex(reduced))
            report["checks"].append(_check("fold-preserves-homology", after == base_betti,
                                           {"before": _betti_obj(base_betti),
                                            "after": _betti_obj(after)}))

    pair = None
    if args.genfaces:
        key, _, value = args.genfaces.partition("=")
        if key == "u":
            pair = clique_neighborhood_faces(g, _parse_label(value))
        elif key == "K":
            clique = [_parse_label(t) for t in value.split(",")]
            _, sub_faces = _decompose(remove_vertices(g, clique))
            pair = clique_extension_faces(g, clique, sub_faces)
        else:
            raise ParseError(f"expected u=<vertex> or K=<set>, got {args.genfaces!r}")
    elif family is not None:
        kind, n, k, _ = family
        pair = path_family_faces(n, k) if kind == "L" else cycle_family_faces(n, k)

    if pair is not None:
        h, gen = pair
        report["homotopy"] = _homotopy_obj(h)
        report["generating_faces"] = _faces_obj(gen.faces)
        if args.verify:
            certified = verify_generating_faces(complex_, gen.faces)
            cert = certified.certificate
            report["certificate_strength"] = cert.strength
            report["checks"].append(_check("generating-faces-certified", True,
                                           {"strength": cert.strength}))
            verdict = matches(complex_, h)
            report["checks"].append(_check("homotopy-matches-oracle", verdict.ok,
                                           {"expected": verdict.expected,
                                            "actual": verdict.actual}))

    if args.bound:
        bound = max_degree_connectivity_bound(g)
        conn = homological_connectivity(complex_)
        report["connectivity"] = {"bound": bound, "homological": conn}
        report["checks"].append(_check("connectivity-bound", conn >= bound,
                                       {"bound": bound, "homological": conn}))
    return report


def run_ar(args) -> dict:
    if args.family:
        ps = _family_points(args.family)
        digest_src = args.family
    else:
        if not args.input:
            raise ParseError("ar needs a points file or --family")
        ps = PointSet.from_json(_read(args.input))
        digest_src = ps.to_obj()
    report: dict = {
        "schema": SCHEMA,
        "command": "ar",
        "inputs": {"digest": _digest(digest_src), "metric": ps.metric,
                   "points": len(ps.points)},
        "checks": [],
    }
    r = Fraction(args.r) if args.r is not None else None

    if args.sweep:
        entries = scale_sweep(ps)
        kind = "squared_distance" if ps.uses_squared_thresholds else "distance"
        report["sweep"] = {
            "threshold_kind": kind,
            "critical_values": [_canon(e.threshold) for e in entries[1:]],
            "entries": [{"threshold": _canon(e.threshold),
                         "maximal_faces": len(e.complex.maximal_faces)}
                        for e in entries],
        }
        shrinking = all(
            set(entries[i + 1].complex.maximal_faces) != set(entries[i].complex.maximal_faces)
            for i in range(len(entries) - 1))
        report["checks"].append(_check("sweep-strictly-shrinking", shrinking))

    if r is not None:
        complex_ = anti_rips_complex(ps, r)
        report["scale"] = _canon(r)
        report["complex"] = complex_to_obj(complex_)
        b = betti(complex_)
        report["betti"] = _betti_obj(b)
        if args.line_homotopy:
            h = line_homotopy(ps, r)
            report["homotopy"] = _homotopy_obj(h)
            if args.verify:
                verdict = matches(complex_, h)
                report["checks"].append(_check("homotopy-matches-oracle", verdict.ok,
                                               {"expected": verdict.expected,
                                                "actual": verdict.actual}))
        if ps.metric == "grid" and r == 1:
            bound = grid_connectivity_bound(ps)
            conn = homological_connectivity(complex_)
            report["connectivity"] = {"bound": bound, "homological": conn}
            report["checks"].append(_check("grid-connectivity-bound", conn >= bound,
                                           {"bound": bound, "homological": conn}))
    return report


def _regress_segment_row(n: int) -> dict:
    h, gen = path_family_faces(n, 3)
    expected = tables.SEGMENT_FACES_K3[n]
    ok_faces = gen.as_sets() == set(expected)
    detail = {"n": n, "faces": _faces_obj(gen.faces), "homotopy": h.describe()}
    complex_ = independence_complex(path_power_graph(n, 3))
    certified = verify_generating_faces(complex_, gen.faces)
    detail["certificate"] = certified.certificate.strength
    ok_oracle = matches(complex_, h).ok
    return _check(f"segment-family-3-n{n}", ok_faces and ok_oracle, detail)


def _regress_cycle_row(n: int) -> dict:
    h, gen = cycle_family_faces(n, 3)
    expected = tables.CYCLE_FACES_K3[n]
    ok_faces = gen.as_sets() == set(expected)
    complex_ = independence_complex(cycle_power_graph(n, 3))
    certified = verify_generating_faces(complex_, gen.faces)
    b = betti(complex_)
    ok_betti = b.normalized() == tables.CYCLE_BETTI_K3[n]
    detail = {"n": n, "faces": _faces_obj(gen.faces), "homotopy": h.describe(),
              "betti": _betti_obj(b), "certificate": certified.certificate.strength}
    return _check(f"cycle-family-3-n{n}", ok_faces and ok_betti and matches(complex_, h).ok,
                  detail)


def run_regress(args) -> dict:
    jobs = max(1, args.jobs)
    row_tasks = [("segment", n) for n in sorted(tables.SEGMENT_FACES_K3)]
    row_tasks += [("cycle", n) for n in sorted(tables.CYCLE_FACES_K3)]

    def run_row(task):
        kind, n = task
        return _regress_segment_row(n) if kind == "segment" else _regress_cycle_row(n)

    if jobs == 1:
        checks = [run_row(t) for t in row_tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(run_row, row_tasks))
    return {
        "schema": SCHEMA,
        "command": "regress",
        "inputs": {"digest": _digest(["segment+cycle", 3])},
        "checks": checks,
    }


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gctk",
        description="graph complexes toolkit: directed-forest, independence and anti-Rips complexes")
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_dt = sub.add_parser("dt", help="complexes of directed forests")
    p_dt.add_argument("input", help="directed edge-list file")
    p_dt.add_argument("--roots", help="comma-separated root set")
    p_dt.add_argument("--shelling", action="store_true", help="emit and check a shelling order")
    p_dt.add_argument("--euler", action="store_true", help="closed-form vs direct Euler characteristic")
    p_dt.add_argument("--verify", action="store_true", help="cross-check against the homology oracle")

    p_ind = sub.add_parser("ind", help="independence complexes")
    p_ind.add_argument("input", nargs="?", help="undirected edge-list file")
    p_ind.add_argument("--family", help="L:n:k or C:n:k generated graph")
    p_ind.add_argument("--fold", action="store_true", help="run the fold reduction")
    p_ind.add_argument("--genfaces", metavar="u=<v>|K=<set>",
                       help="generating faces via a vertex split or a clique extension")
    p_ind.add_argument("--bound", action="store_true", help="max-degree connectivity bound")
    p_ind.add_argument("--verify", action="store_true", help="certify faces and oracle-match")

    p_ar = sub.add_parser("ar", help="anti-Rips complexes")
    p_ar.add_argument("input", nargs="?", help="point-set JSON file")
    p_ar.add_argument("--family", help="grid:a:b generated point set")
    p_ar.add_argument("--r", help="scale (exact decimal)")
    p_ar.add_argument("--line-homotopy", action="store_true", dest="line_homotopy",
                      help="wedge recursion on the line")
    p_ar.add_argument("--sweep", action="store_true", help="all complexes over the scale range")
    p_ar.add_argument("--verify", action="store_true", help="cross-check against the homology oracle")

    p_reg = sub.add_parser("regress", help="replay the frozen family tables")
    p_reg.add_argument("--jobs", type=int, default=1, help="parallel verification instances")
    return parser


_RUNNERS = {"dt": run_dt, "ind": run_ind, "ar": run_ar, "regress": run_regress}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report = _RUNNERS[args.subcommand](args)
    except ToolkitError as exc:
        error_report = {
            "schema": SCHEMA,
            "command": args.subcommand,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(_render(error_report, args.pretty))
        print(f"elapsed_ms={int((time.monotonic() - started) * 1000)}", file=sys.stderr)
        return 2
    print(_render(report, args.pretty))
    print(f"elapsed_ms={int((time.monotonic() - started) * 1000)}", file=sys.stderr)
    return 0 if all(c["pass"] for c in report.get("checks", [])) else 1


if __name__ == "__main__":
    sys.exit(main())
