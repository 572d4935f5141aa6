"""Command-line front end.

Every subcommand reads a graph file, computes, prints text (or JSON with
``--json``), and exits 0 on success, 1 when a mathematical check fails,
2 on bad input, and 3 when a face or search budget runs out.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import FaceBudget
from .errors import FaceBudgetExceededError, TubingsError
from .graphs import enumerate_reductions
from .io import GraphDocument, parse_collection
from .lattice import delzant_check
from .parity import (
    confined_odd_complex,
    even_tube_complex,
    odd_tube_complex,
    saturated_odd_complex,
)
from .poincare import cross_check, a_polynomial, poincare_brute, poincare_reduced
from .posets import TubeUnion, order_complex, parity_subgraph_poset
from .tubes import Tube, TubeSystem, enumerate_tubes

_VARIANTS = {
    "odd": odd_tube_complex,
    "even": even_tube_complex,
    "prime": confined_odd_complex,
    "dprime": saturated_odd_complex,
}


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="print machine-readable JSON instead of text",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS,
        help="seed for sampled verification (default 0)",
    )
    common.add_argument(
        "--face-budget",
        type=int,
        dest="face_budget",
        default=argparse.SUPPRESS,
        help="maximum faces any computation may enumerate",
    )
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="tubings",
        description="Tubing complexes of graphs with parallel-edge bundles.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tubes", parents=[common], help="list all tubes")
    p.add_argument("graph")

    p = sub.add_parser("complex", parents=[common], help="tubing complex")
    p.add_argument("graph")

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of a parity subcomplex")
    p.add_argument("graph")
    p.add_argument("--collection", required=True, help="comma-separated members")
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="odd")

    p = sub.add_parser("apoly", parents=[common], help="a-polynomial of the graph")
    p.add_argument("graph")

    p = sub.add_parser("poincare", parents=[common], help="Poincare polynomial")
    p.add_argument("graph")
    p.add_argument("--method", choices=["reduced", "brute", "both"], default="both")

    p = sub.add_parser("verify", parents=[common], help="cross-check both routes and the supporting identities")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, help="face budget for this run")
    p.add_argument(
        "--max-collections",
        type=int,
        default=None,
        dest="max_collections",
        help="sample at most this many even collections",
    )

    p = sub.add_parser("order-complex", parents=[common], help="order complex of a parity poset")
    p.add_argument("graph")
    p.add_argument("--collection", required=True)
    p.add_argument("--parity", choices=["odd", "even"], required=True)
    p.add_argument("--shellable", action="store_true", help="also search for a shelling order")
    p.add_argument(
        "--include-collection",
        action="store_true",
        dest="include_collection",
        help="keep the element whose representation equals the collection",
    )

    p = sub.add_parser("delzant-check", parents=[common], help="smoothness of all maximal tubings")
    p.add_argument("graph")

    p = sub.add_parser("lessdot", parents=[common], help="all reductions of the graph")
    p.add_argument("graph")

    return parser


def _load(ns):
    return GraphDocument.from_path(ns.graph).graph


def _vertex_name(vertex, graph):
    if isinstance(vertex, Tube):
        return vertex.name()
    if isinstance(vertex, TubeUnion):
        return graph.format_members(vertex.members)
    return str(vertex)


def _print_json(payload):
    print(json.dumps(payload))


def _cmd_tubes(ns, limit, as_json, seed):
    graph = _load(ns)
    tubes = enumerate_tubes(graph, FaceBudget(limit))
    names = [t.name() for t in tubes]
    if as_json:
        _print_json({"count": len(names), "tubes": names})
    else:
        print(f"tubes: {len(names)}")
        for name in names:
            print(name)
    return 0


def _cmd_complex(ns, limit, as_json, seed):
    graph = _load(ns)
    budget = FaceBudget(limit)
    complex_ = TubeSystem(graph, budget).tubing_complex()
    names = [_vertex_name(v, graph) for v in complex_.vertices]
    faces = [
        [_vertex_name(v, graph) for v in face]
        for face in complex_.maximal_faces(budget)
    ]
    if as_json:
        _print_json({"vertices": names, "maximal_faces": faces})
    else:
        print(f"vertices: {len(names)}")
        for name in names:
            print(name)
        print(f"maximal faces: {len(faces)}")
        for face in faces:
            print(" ".join(face))
    return 0


def _cmd_betti(ns, limit, as_json, seed):
    graph = _load(ns)
    budget = FaceBudget(limit)
    collection = parse_collection(ns.collection, graph)
    complex_ = _VARIANTS[ns.variant](graph, collection, budget=budget)
    betti = complex_.betti_reduced(budget)
    shown = graph.format_members(collection.members())
    if as_json:
        _print_json(
            {
                "collection": shown,
                "variant": ns.variant,
                "vertices": complex_.n_vertices(),
                "betti": betti.to_list(),
            }
        )
    else:
        print(f"collection: {shown}")
        print(f"variant: {ns.variant}")
        print(f"vertices: {complex_.n_vertices()}")
        print(f"betti: {betti.to_list()}")
    return 0


def _cmd_apoly(ns, limit, as_json, seed):
    graph = _load(ns)
    poly = a_polynomial(graph, FaceBudget(limit))
    if as_json:
        _print_json({"apoly": poly.to_list()})
    else:
        print(str(poly))
    return 0


def _cmd_poincare(ns, limit, as_json, seed):
    graph = _load(ns)
    budget = FaceBudget(limit)
    reduced = brute = None
    if ns.method in ("reduced", "both"):
        reduced = poincare_reduced(graph, budget)
    if ns.method in ("brute", "both"):
        brute = poincare_brute(graph, budget)
    if ns.method == "both":
        equal = reduced == brute
        if as_json:
            _print_json(
                {"reduced": reduced.to_list(), "brute": brute.to_list(), "equal": equal}
            )
        else:
            print(f"reduced: {reduced}")
            print(f"brute: {brute}")
            print(f"equal: {'yes' if equal else 'no'}")
        return 0 if equal else 1
    poly = reduced if reduced is not None else brute
    if as_json:
        _print_json({ns.method: poly.to_list()})
    else:
        print(str(poly))
    return 0


def _cmd_verify(ns, limit, as_json, seed):
    graph = _load(ns)
    effective = ns.budget if ns.budget is not None else limit
    report = cross_check(
        graph,
        budget=FaceBudget(effective),
        seed=seed,
        max_collections=ns.max_collections,
    )
    failures = [
        {
            "check": f.check,
            "collection": None
            if f.collection is None
            else graph.format_members(f.collection.members()),
            "detail": f.detail,
        }
        for f in report.failures
    ]
    if as_json:
        _print_json(
            {
                "ok": report.ok,
                "sampled": report.sampled,
                "collections": report.collections_checked,
                "reduced": None
                if report.poincare_reduced is None
                else report.poincare_reduced.to_list(),
                "brute": None
                if report.poincare_brute is None
                else report.poincare_brute.to_list(),
                "failures": failures,
            }
        )
    else:
        print(f"collections checked: {report.collections_checked}"
              + (" (sampled)" if report.sampled else ""))
        if report.poincare_reduced is not None:
            print(f"reduced: {report.poincare_reduced}")
            print(f"brute: {report.poincare_brute}")
        for f in failures:
            where = f["collection"] if f["collection"] is not None else "-"
            print(f"FAIL {f['check']} at {where}: {f['detail']}")
        print(f"ok: {'yes' if report.ok else 'no'}")
    return 0 if report.ok else 1


def _cmd_order_complex(ns, limit, as_json, seed):
    graph = _load(ns)
    budget = FaceBudget(limit)
    collection = parse_collection(ns.collection, graph)
    poset = parity_subgraph_poset(
        graph,
        collection,
        parity=ns.parity,
        exclude_collection=not ns.include_collection,
        budget=budget,
    )
    complex_ = order_complex(poset)
    betti = complex_.betti_reduced(budget)
    payload = {
        "collection": graph.format_members(collection.members()),
        "parity": ns.parity,
        "elements": len(poset),
        "betti": betti.to_list(),
    }
    exit_code = 0
    if ns.shellable:
        report = complex_.shellable(budget=budget)
        payload["shellable"] = report.status
        payload["expansions"] = report.expansions
        if report.status == "unknown":
            exit_code = 3
    if as_json:
        _print_json(payload)
    else:
        print(f"collection: {payload['collection']}")
        print(f"parity: {ns.parity}")
        print(f"elements: {payload['elements']}")
        print(f"betti: {payload['betti']}")
        if ns.shellable:
            print(f"shellable: {payload['shellable']}")
    return exit_code


def _cmd_delzant(ns, limit, as_json, seed):
    graph = _load(ns)
    report = delzant_check(graph, budget=FaceBudget(limit))
    failures = [
        {"tubing": list(f.tubing), "reason": f.reason} for f in report.failures
    ]
    if as_json:
        _print_json(
            {
                "ok": report.ok,
                "tubings": report.tubings_checked,
                "size": report.tubing_size,
                "rank": report.characteristic_rank,
                "expected": report.expected_rank,
                "failures": failures,
            }
        )
    else:
        print(f"tubings: {report.tubings_checked}")
        print(f"size: {report.tubing_size} (expected {report.expected_rank})")
        print(f"rank: {report.characteristic_rank} (expected {report.expected_rank})")
        for f in failures:
            print(f"FAIL {' '.join(f['tubing']) or '-'}: {f['reason']}")
        print(f"ok: {'yes' if report.ok else 'no'}")
    return 0 if report.ok else 1


def _cmd_lessdot(ns, limit, as_json, seed):
    graph = _load(ns)
    reductions = enumerate_reductions(graph)
    if as_json:
        items = []
        for h in reductions:
            items.append(
                {
                    "nodes": list(h.nodes),
                    "edges": [[u, v, lab] for u, v, lab in h.edges],
                }
            )
        _print_json({"count": len(reductions), "reductions": items})
    else:
        print(f"reductions: {len(reductions)}")
        for h in reductions:
            nodes = ",".join(str(n) for n in h.nodes)
            edges = " ".join(
                f"{u}-{v}" + (f":{lab}" if lab else "") for u, v, lab in h.edges
            )
            print(f"nodes {nodes}" + (f" edges {edges}" if edges else ""))
    return 0


_COMMANDS = {
    "tubes": _cmd_tubes,
    "complex": _cmd_complex,
    "betti": _cmd_betti,
    "apoly": _cmd_apoly,
    "poincare": _cmd_poincare,
    "verify": _cmd_verify,
    "order-complex": _cmd_order_complex,
    "delzant-check": _cmd_delzant,
    "lessdot": _cmd_lessdot,
}


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    as_json = getattr(ns, "json", False)
    seed = getattr(ns, "seed", 0)
    limit = getattr(ns, "face_budget", None)
    try:
        return _COMMANDS[ns.command](ns, limit, as_json, seed)
    except FaceBudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TubingsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
