"""Command line interface.

Usage examples
--------------
  bdcx build star3.txt
  bdcx homotopy star3.txt --format text
  bdcx crosscheck p4.txt
  bdcx enumerate --max-edges 5 --lambda-max 2 --mode forests
  bdcx enumerate --max-edges 6 --lambda-max 2 --mode leafy-graphs --seed 7

Exit status: 0 success, 1 analysis failure (check failed, undecided search,
precondition such as a non-forest input), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .chordality import is_chordal
from .errors import BudgetExceeded, NotAForest, ParseError, PreconditionError
from .harness import corner_checks, crosscheck_enumerate, forest_checks, leaf_split_checks
from .homology import reduced_homology
from .homotopy import forest_type
from .hypergraph import Hypergraph, bd_complex, lambda_hypergraph
from .instance_io import InstanceFile, read_instance
from .shelling import find_shelling, spanning_facets, verify_shelling, wedge_from_shelling

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FIELDS = ("instance", "command", "facets", "betti", "spheres", "chordal", "shelling", "trace", "checks", "seed", "elapsed_ms")


class AnalysisFailure(Exception):
    pass


def _jsonable(x):
    if isinstance(x, (tuple, list, frozenset, set)):
        items = list(x)
        if isinstance(x, (frozenset, set)):
            items = sorted(items, key=repr)
        return [_jsonable(i) for i in items]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def _instance_echo(inst: InstanceFile) -> dict:
    g = inst.graph
    return {
        "name": inst.name,
        "vertices": [str(v) for v in g.vertices],
        "edges": [[str(u), str(v)] for u, v in g.edges],
        "lambda": {str(v): inst.bound[v] for v in g.vertices},
    }


def _hypergraph_json(h: Hypergraph) -> dict:
    return {"vertices": _jsonable(h.vertices), "edges": [_jsonable(sorted(e, key=h.vertices.index)) for e in h.edges]}


def resolve_budget(flag: int | None) -> int | None:
    if flag is not None:
        return flag
    env = os.environ.get("BDCX_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"BDCX_BUDGET must be an integer, got {env!r}") from None
    return None


def _kw(budget):
    return {} if budget is None else {"budget": budget}


# -- commands -----------------------------------------------------------------


def cmd_build(inst: InstanceFile, args, report: dict) -> None:
    k = bd_complex(inst.graph, inst.bound)
    report["facets"] = {
        "count": len(k.facet_masks),
        "dimension": k.dimension,
        "f_vector": k.f_vector(),
        "list": _jsonable(k.facet_list()),
    }


def cmd_homology(inst: InstanceFile, args, report: dict) -> None:
    profile = reduced_homology(bd_complex(inst.graph, inst.bound))
    report["betti"] = profile.to_json()


def cmd_homotopy(inst: InstanceFile, args, report: dict) -> None:
    wedge, trace = forest_type(inst.graph, inst.bound)
    report["spheres"] = wedge.to_json()
    report["trace"] = _jsonable_tree(trace.to_json())


def _jsonable_tree(node: dict) -> dict:
    node = dict(node)
    for key in ("edge", "subset"):
        if key in node:
            node[key] = _jsonable(node[key])
    node["edges"] = _jsonable(node["edges"])
    if "children" in node:
        node["children"] = [_jsonable_tree(c) for c in node["children"]]
    return node


def cmd_chordal(inst: InstanceFile, args, report: dict) -> None:
    res = is_chordal(lambda_hypergraph(inst.graph, inst.bound), **_kw(args.budget))
    entry = {"chordal": res.chordal, "states": res.states}
    if res.chordal:
        entry["elimination_order"] = _jsonable(res.witness)
    else:
        entry["witness"] = _hypergraph_json(res.witness)
        entry["path"] = [[op, _jsonable(v)] for op, v in res.path]
    report["chordal"] = entry


def cmd_shell(inst: InstanceFile, args, report: dict) -> None:
    k = bd_complex(inst.graph, inst.bound)
    order = find_shelling(k, **_kw(args.budget))
    if order is None:
        report["shelling"] = {"shellable": False}
        raise AnalysisFailure("complex is not shellable")
    ordered = [sorted(f, key=repr) for f in order]
    report["shelling"] = {
        "shellable": True,
        "verified": verify_shelling(k, order),
        "order": _jsonable(ordered),
        "spanning": _jsonable([sorted(f, key=repr) for f in spanning_facets(k, order)]),
    }
    report["spheres"] = wedge_from_shelling(k, order).to_json()


def cmd_crosscheck(inst: InstanceFile, args, report: dict) -> None:
    g, lam = inst.graph, inst.bound
    profile = reduced_homology(bd_complex(g, lam))
    report["betti"] = profile.to_json()
    if g.is_forest():
        wedge, _ = forest_type(g, lam)
        report["spheres"] = wedge.to_json()
        checks = forest_checks(g, lam, budget=args.budget)
    else:
        checks = leaf_split_checks(g, lam)
        checks.update(corner_checks(g, lam))
    report["checks"] = checks
    if not all(checks.values()):
        raise AnalysisFailure("failed checks: " + ", ".join(n for n, ok in checks.items() if not ok))


def cmd_enumerate(args, report: dict) -> None:
    report["instance"] = {
        "mode": args.mode,
        "max_edges": args.max_edges,
        "lambda_max": args.lambda_max,
        "samples": args.samples,
        "max_vertices": args.max_vertices,
    }
    sweep = crosscheck_enumerate(
        args.max_edges,
        args.lambda_max,
        args.mode,
        args.seed,
        samples=args.samples,
        max_vertices=args.max_vertices,
        budget=args.budget,
    )
    report["checks"] = sweep.to_json()
    if not sweep.ok:
        raise AnalysisFailure(f"{len(sweep.failures)} failing instances")


INSTANCE_COMMANDS = {
    "build": (cmd_build, "facets of BD(G, lambda)"),
    "homology": (cmd_homology, "reduced integral homology (Betti numbers and torsion)"),
    "homotopy": (cmd_homotopy, "wedge-of-spheres type of BD of a forest, with trace"),
    "chordal": (cmd_chordal, "chordality of the hypergraph L(G, lambda)"),
    "shell": (cmd_shell, "find and verify a shelling; spanning-facet wedge"),
    "crosscheck": (cmd_crosscheck, "symbolic results against the homology oracle"),
}


# -- plumbing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="search budget (overrides BDCX_BUDGET)")
    common.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical output)")

    parser = argparse.ArgumentParser(prog="bdcx", description="Bounded degree complexes of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in INSTANCE_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("instance", help="instance file (v/e/l grammar)")
    p = sub.add_parser("enumerate", parents=[common], help="corpus-wide cross-check")
    p.add_argument("--max-edges", type=int, default=4)
    p.add_argument("--lambda-max", type=int, default=2)
    p.add_argument("--mode", choices=("forests", "leafy-graphs"), default="forests")
    p.add_argument("--samples", type=int, default=100, help="random forests beyond five edges")
    p.add_argument("--max-vertices", type=int, default=6, help="vertex cap for leafy-graphs mode")
    return parser


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    inst = report.get("instance")
    if inst and "edges" in inst:
        lines.append("edges: " + " ".join(f"{u}-{v}" for u, v in inst["edges"]))
        lines.append("lambda: " + " ".join(f"{v}={k}" for v, k in inst["lambda"].items()))
    elif inst:
        lines.append("corpus: " + ", ".join(f"{k}={v}" for k, v in inst.items()))
    if report.get("facets") is not None:
        f = report["facets"]
        lines.append(f"facets: {f['count']} (dimension {f['dimension']}, f-vector {f['f_vector']})")
        lines += ["  {" + ", ".join("-".join(map(str, e)) for e in facet) + "}" for facet in f["list"]]
    if report.get("betti") is not None:
        table = report["betti"]
        lines.append("reduced homology: " + (", ".join(f"H~{d}: rank {v[0]}" + (f" torsion {v[1:]}" if len(v) > 1 else "") for d, v in table.items()) or "trivial"))
    if report.get("spheres") is not None:
        s = report["spheres"]
        lines.append("homotopy type: " + (s if isinstance(s, str) else " v ".join(f"{c} x S^{d}" for d, c in s.items())))
    if report.get("chordal") is not None:
        c = report["chordal"]
        lines.append(f"chordal: {str(c['chordal']).lower()} ({c['states']} minors explored)")
    if report.get("shelling") is not None:
        sh = report["shelling"]
        lines.append(f"shellable: {str(sh['shellable']).lower()}")
        if sh.get("order"):
            lines.append("shelling order: " + " | ".join(" ".join("-".join(map(str, e)) for e in f) for f in sh["order"]))
    checks = report.get("checks")
    if checks is not None:
        if "summary" in checks:
            lines.append(f"instances: {checks['instances']}")
            for name, c in checks["summary"].items():
                lines.append(f"  {name}: {c['passed']} passed, {c['failed']} failed")
            for f in checks["failures"]:
                lines.append(f"FAILED {f['key']}: {', '.join(f['failed'])}")
                lines.append(f["instance"].rstrip())
        else:
            if "symbolic_betti_matches_oracle" in checks:
                lines.append(f"symbolic Betti == oracle Betti: {str(checks['symbolic_betti_matches_oracle']).lower()}")
            for name, ok in checks.items():
                lines.append(f"  {name}: {'pass' if ok else 'FAIL'}")
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    if report.get("elapsed_ms") is not None:
        lines.append(f"elapsed: {report['elapsed_ms']} ms")
    return "\n".join(lines) + "\n"


def run_command(argv: list[str]) -> tuple[int, dict]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), {}
    report = dict.fromkeys(FIELDS)
    report["command"] = args.command
    report["seed"] = args.seed
    status = EXIT_OK
    start = time.perf_counter()
    try:
        args.budget = resolve_budget(args.budget)
        if args.command == "enumerate":
            cmd_enumerate(args, report)
        else:
            inst = read_instance(args.instance)
            report["instance"] = _instance_echo(inst)
            INSTANCE_COMMANDS[args.command][0](inst, args, report)
    except (ParseError, OSError) as exc:
        report["error"] = str(exc)
        status = EXIT_USAGE
    except NotAForest:
        report["error"] = "not a forest"
        status = EXIT_FAIL
    except (AnalysisFailure, BudgetExceeded, PreconditionError) as exc:
        report["error"] = str(exc)
        status = EXIT_FAIL
    if args.timing:
        report["elapsed_ms"] = round((time.perf_counter() - start) * 1000)
    return status, report


def _output_format(argv: list[str]) -> str:
    probe = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    probe.add_argument("--format", default="json")
    return probe.parse_known_args(argv)[0].format


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    status, report = run_command(argv)
    if not report:
        return status
    if _output_format(argv) == "json":
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
