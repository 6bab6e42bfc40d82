"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad flags or unreadable input.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import random
import sys
import time
from typing import Sequence

from . import arrangement as arrmod
from . import io
from .construct import (ensure_general_position, greedy_subcoloring, represent_bipartite,
                        represent_cobipartite, represent_general, represent_split, represent_subcolored,
                        split_partition)
from .drawing import certify, regular_drawing
from .extremal import (claim1_representation, e_of_h, matching_graph, random_matching,
                       single_obstacle_family, thm5_construction)
from .svg import complete_bipartite_edges, render
from .verify import verify

METHODS = ("cobipartite", "bipartite", "split", "general", "subcolor")


class InputError(Exception):
    """Unreadable or inconsistent input file."""


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _sizes(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return out


def _radius(text: str) -> float:
    v = float(text)      # display radius only
    if v < 0:
        raise argparse.ArgumentTypeError("radius must be non-negative")
    return v


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="obsrep", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an obstacle representation")
    c.add_argument("--input", required=True, help="graph JSON {n, edges, ...}")
    c.add_argument("--method", required=True, choices=METHODS)
    c.add_argument("--assignment", help="JSON list: slot of each vertex (general method)")
    c.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="check a representation against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--rep", required=True)

    a = sub.add_parser("arrangement", help="arrangement statistics of a bipartite drawing")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--drawing", help="drawing JSON {m, n, w, P, Q}")
    src.add_argument("--certified", nargs=2, type=_positive, metavar=("M", "N"),
                     help="use the certified dilated drawing of K_{M,N}")
    src.add_argument("--regular", nargs=2, type=_positive, metavar=("M", "N"),
                     help="use the regular drawing of K_{M,N} with unit width and steps")
    a.add_argument("--stats", action="store_true", required=True)
    a.add_argument("--save-drawing", help="also write the drawing JSON")

    e = sub.add_parser("extremal", help="extremal constructions")
    esub = e.add_subparsers(dest="which", required=True)
    t4 = esub.add_parser("thm4", help="h faces incident to many edges of K_n")
    t4.add_argument("--n", type=_positive, required=True)
    t4.add_argument("--h", type=_positive, required=True)
    t4.add_argument("--demo", type=int, default=0, metavar="COUNT",
                    help="also represent COUNT random supergraphs with at most h obstacles")
    t4.add_argument("--seed", type=int, default=0)
    t5 = esub.add_parser("thm5", help="face family around uniform crossings")
    t5.add_argument("--n", type=_positive, required=True)
    t5.add_argument("--M", type=_positive, required=True)
    t5.add_argument("--K", type=_positive, help="override the rounded cube root of M/n")
    g1 = esub.add_parser("g1", help="K_n minus a random matching with one obstacle")
    g1.add_argument("--n", type=_positive, required=True)
    g1.add_argument("--seed", type=int, default=0)
    g1.add_argument("--out", help="write the representation JSON here")
    g1.add_argument("--graph-out", help="write the represented graph JSON here")

    s = sub.add_parser("export-svg", help="render a representation or drawing")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--rep")
    src.add_argument("--drawing")
    s.add_argument("--graph", help="draw the edges of this graph")
    s.add_argument("--out", required=True)
    s.add_argument("--inflate", type=_radius, default=3.0,
                   help="display radius for point and segment obstacles")

    b = sub.add_parser("bench", help="time arrangement building and certification")
    b.add_argument("--sizes", type=_sizes, default=[2, 4, 6, 8])
    b.add_argument("--out", help="CSV file (default: standard output)")
    return p


def _load(path: str) -> dict:
    try:
        return io.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(obj: dict) -> None:
    json.dump(io.plain(obj), sys.stdout, indent=1)
    sys.stdout.write("\n")


def _construct(args) -> int:
    d = _load(args.input)
    try:
        G = io.graph_from_json(d)
        if args.method in ("bipartite", "cobipartite"):
            sides = d.get("sides")
            fn = represent_bipartite if args.method == "bipartite" else represent_cobipartite
            rep = fn(G, *sides) if sides else fn(G)
            target = G if args.method == "bipartite" else G.complement()
        elif args.method == "split":
            if "clique" in d and "independent" in d:
                rep = represent_split(G, d["clique"], d["independent"])
            else:
                rep = represent_split(G, *split_partition(G))
            target = G
        elif args.method == "general":
            assignment = _load(args.assignment) if args.assignment else None
            rep = represent_general(G, assignment)
            target = G
        else:
            c = io.subcoloring_from_json(d["subcoloring"]) if "subcoloring" in d else greedy_subcoloring(G)
            rep = represent_subcolored(G, c)
            target = G
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    rep = ensure_general_position(rep)
    report = verify(target, rep)
    rep_json = io.rep_to_json(rep)
    io.dump(rep_json, args.out)
    _emit({"obstacles": len(rep.obstacles), "passed": report.passed,
           "meta": rep_json.get("meta", {}), "out": args.out})
    return 0 if report.passed else 1


def _verify(args) -> int:
    try:
        G = io.graph_from_json(_load(args.graph))
        rep = io.rep_from_json(_load(args.rep))
        report = verify(G, rep)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(report.to_dict())
    return 0 if report.passed else 1


def _arrangement(args) -> int:
    if args.drawing:
        try:
            D = io.drawing_from_json(_load(args.drawing))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(str(exc)) from exc
    elif args.regular:
        D = regular_drawing(*args.regular)
    else:
        D = certify(*args.certified).drawing
    if args.save_drawing:
        io.dump(io.drawing_to_json(D), args.save_drawing)
    A = arrmod.build(D.segments())
    stats = A.stats()
    stats["euler"] = A.euler_check()
    _emit(stats)
    return 0


def _extremal(args) -> int:
    try:
        if args.which == "thm4":
            res = e_of_h(args.n, args.h)
            out = {"n": res.n, "h": res.h, "levels": res.levels, "faces": res.faces,
                   "incidentEdges": res.count, "bound": res.bound}
            rng = random.Random(args.seed)
            passed = True
            demos = []
            for _ in range(args.demo):
                added = {p for p in sorted(res.incident) if rng.random() < 0.5}
                G, rep = claim1_representation(res, added)
                ok = verify(G, rep).passed
                passed &= ok
                demos.append({"obstacles": len(rep.obstacles), "passed": ok})
            if demos:
                out["demo"] = demos
            _emit(out)
            return 0 if passed else 1
        if args.which == "thm5":
            _emit(thm5_construction(args.n, args.M, args.K).to_dict())
            return 0
        f = random_matching(args.n, random.Random(args.seed))
        rep = single_obstacle_family(args.n, f, args.seed)
        G = matching_graph(args.n, f)
        report = verify(G, rep)
        if args.out:
            io.dump(io.rep_to_json(rep), args.out)
        if args.graph_out:
            io.dump(io.graph_to_json(G), args.graph_out)
        _emit({"n": args.n, "matching": sorted(f.items()), "passed": report.passed})
        return 0 if report.passed else 1
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _export_svg(args) -> int:
    try:
        if args.rep:
            rep = io.rep_from_json(_load(args.rep))
            points, obstacles, edges = rep.placement, rep.obstacles, []
        else:
            D = io.drawing_from_json(_load(args.drawing))
            points, obstacles = D.P + D.Q, []
            edges = complete_bipartite_edges(D.m, D.n)
        if args.graph:
            edges = sorted(io.graph_from_json(_load(args.graph)).edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    with open(args.out, "w") as fh:
        fh.write(render(points, obstacles, edges, inflate=args.inflate))
    return 0


def _bench(args) -> int:
    rows = []
    for s in args.sizes:
        certify.cache_clear()
        t = time.perf_counter()
        cert = certify(s, s)
        rows.append(("certify_epsilon", s, (time.perf_counter() - t) * 1000))
        segs = cert.drawing.segments()
        t = time.perf_counter()
        arrmod.build(segs)
        rows.append(("arrangement", s, (time.perf_counter() - t) * 1000))
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(fh)
        w.writerow(["op", "size", "millis"])
        for op, size, ms in rows:
            w.writerow([op, size, f"{ms:.1f}"])
    finally:
        if args.out:
            fh.close()
    return 0


HANDLERS = {"construct": _construct, "verify": _verify, "arrangement": _arrangement,
            "extremal": _extremal, "export-svg": _export_svg, "bench": _bench}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = parser().parse_args(argv)
    except SystemExit as exc:          # argparse reports flag errors with code 2
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return HANDLERS[args.command](args)
    except InputError as exc:
        print(f"obsrep: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
