"""Command-line entry point: ``polyclar <command> [options]``.

Exit status: 0 on success, 1 when a theorem check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .clar_ip import build_clar_ip, solve_ip, solve_lp_exact
from .counting import count_perfect_matchings
from .errors import InputError, PolyclarError, TheoremViolation
from .forcing import forcing_number, max_forcing_number, max_forcing_via_clar
from .generate import GeneratorConfig
from .grid import EDGE_MODE, MODES, PolyominoGraph, parse_ascii, parse_json
from .harness import DEFAULT_N_MAX, BatteryConfig, run_battery, summarize, to_csv, to_jsonl, violations
from .matching import enumerate_perfect_matchings, has_perfect_matching
from .resonance import clar_exhaustive
from .structure import classify_edges, elementary_components
from .svg import render

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class _Violation(Exception):
    """Raised after output is written, to turn a failed check into status 1."""


def read_graph(args) -> PolyominoGraph:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
    fmt = args.format
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "ascii"
    if fmt == "json":
        try:
            return parse_json(json.loads(text), args.mode)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
    return parse_ascii(text, args.mode)


def _cells(g, squares):
    return [list(g.squares[s]) for s in sorted(squares)]


def cmd_info(args):
    g = read_graph(args)
    if args.emit_json:
        return g.to_json()
    return {
        "cells": len(g.cells),
        "vertices": g.n_vertices,
        "edges": len(g.edges),
        "squares": len(g.squares),
        "hole_squares": len(g.hole_squares),
        "boundary_edges": len(g.boundary_edges),
        "internal_squares": len(g.internal_squares),
        "black": len(g.black),
        "white": len(g.white),
        "two_connected": g.is_two_connected,
        "polyomino_graph": g.is_polyomino_graph,
        "has_perfect_matching": has_perfect_matching(g),
        "width": g.width,
        "height": g.height,
    }


def cmd_count(args):
    g = read_graph(args)
    return {"perfect_matchings": str(count_perfect_matchings(g))}


def cmd_matchings(args):
    g = read_graph(args)
    ms = enumerate_perfect_matchings(g)
    return {"count": str(len(ms)), "matchings": [m.to_json() for m in ms]}


def cmd_clar(args):
    g = read_graph(args)
    out = {}
    if args.method in ("exhaustive", "both"):
        res = clar_exhaustive(g)
        out["clar"] = res.clar_number
        out["witness_sets"] = [fs.to_json(g) for fs in res.witness_sets]
    if args.method in ("ip", "both"):
        ip = build_clar_ip(g)
        lp = solve_lp_exact(ip)
        sol = solve_ip(ip, g, root=lp)
        out["clar_ip"] = sol.optimum
        out["ip_faces"] = _cells(g, sol.faces)
        out["lp_optimum"] = str(lp.objective)
        out.setdefault("clar", sol.optimum)
    if args.method == "both":
        out["agree"] = out["clar"] == out["clar_ip"]
        if not out["agree"]:
            raise _Violation(out)
    out["method"] = args.method
    return out


def cmd_forcing(args):
    g = read_graph(args)
    ms = enumerate_perfect_matchings(g)
    if args.index is not None:
        if not 0 <= args.index < len(ms):
            raise InputError(f"matching index {args.index} out of range (0..{len(ms) - 1})")
        ms = [ms[args.index]]
    results = [forcing_number(g, m) for m in ms]
    out = {
        "results": [r.to_json() for r in results],
        "minimax_holds": all(r.minimax_holds for r in results),
    }
    if not out["minimax_holds"]:
        raise _Violation(out)
    return out


def cmd_maxforce(args):
    g = read_graph(args)
    out = {"method": args.method}
    if args.method in ("exhaustive", "both"):
        mf = max_forcing_number(g)
        out["brute_force"] = mf.value
        out["witness"] = mf.witness.matching.to_json()
    if args.method in ("ip", "both"):
        out["via_clar"] = max_forcing_via_clar(g)
    if args.method == "both":
        out["agree"] = out["brute_force"] == out["via_clar"]
        if not out["agree"]:
            raise _Violation(out)
    return out


def cmd_decompose(args):
    g = read_graph(args)
    cls = classify_edges(g)
    dec = elementary_components(g)

    def pairs(edges):
        return sorted([list(p) for p in sorted(g.edge_points(e))] for e in edges)

    return {
        "elementary": cls.elementary,
        "allowed": pairs(cls.allowed),
        "forbidden": pairs(cls.forbidden),
        "components": [
            {
                "vertices": [list(g.vertices[v]) for v in sorted(c.vertices)],
                "squares": _cells(g, c.squares),
                "edges": len(c.edges),
            }
            for c in dec.components
        ],
        "isolated_vertices": dec.isolated,
    }


def cmd_verify(args):
    cfg = BatteryConfig(
        n_max=args.limit,
        generator=GeneratorConfig(max_cells=args.limit, connectivity_mode=args.mode),
        workers=args.workers,
    )
    reports = run_battery(args.limit, cfg)
    text = to_jsonl(reports)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        Path(args.csv).write_text(to_csv(reports))
    summary = summarize(reports)
    print(json.dumps(summary, indent=2 if args.pretty else None), file=sys.stderr)
    return EXIT_VIOLATION if violations(reports) else EXIT_OK


def cmd_render(args):
    g = read_graph(args)
    matching = None
    faces = ()
    if args.matching is not None:
        ms = enumerate_perfect_matchings(g)
        if not 0 <= args.matching < len(ms):
            raise InputError(f"matching index {args.matching} out of range")
        matching = ms[args.matching]
    if args.clar:
        res = clar_exhaustive(g)
        witness = res.witness_sets[0]
        faces = witness.squares
        if matching is None:
            matching = witness.witness
    svg = render(g, matching, faces, args.scale)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


COMMANDS = {
    "info": cmd_info,
    "count": cmd_count,
    "matchings": cmd_matchings,
    "clar": cmd_clar,
    "forcing": cmd_forcing,
    "maxforce": cmd_maxforce,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="graph file, or '-' for stdin (default)")
    common.add_argument("--format", choices=("auto", "ascii", "json"), default="auto")
    common.add_argument("--mode", choices=MODES, default=EDGE_MODE, help="cell connectivity rule")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="polyclar", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", parents=[common], help="graph statistics")
    info.add_argument("--emit-json", action="store_true", help="print the normalized graph as JSON")
    sub.add_parser("count", parents=[common], help="exact perfect-matching count")
    sub.add_parser("matchings", parents=[common], help="list all perfect matchings")
    for name, helptext in (("clar", "Clar number"), ("maxforce", "maximum forcing number")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--method", choices=("exhaustive", "ip", "both"), default="both" if name == "maxforce" else "exhaustive")
    forcing = sub.add_parser("forcing", parents=[common], help="forcing number of each perfect matching")
    forcing.add_argument("--index", type=int, help="only the matching with this enumeration index")
    sub.add_parser("decompose", parents=[common], help="allowed edges and elementary components")
    verify = sub.add_parser("verify", parents=[common], help="run the theorem battery")
    verify.add_argument("--limit", type=int, default=DEFAULT_N_MAX, help="largest polyomino size (cells)")
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--csv", help="also write a CSV summary here")
    render_p = sub.add_parser("render", parents=[common], help="SVG drawing")
    render_p.add_argument("--matching", type=int, help="overlay the perfect matching with this index")
    render_p.add_argument("--clar", action="store_true", help="shade a maximum resonant set")
    render_p.add_argument("--scale", type=int, default=40, help="pixels per lattice unit")
    return p


def _pretty(obj) -> str:
    if isinstance(obj, dict) and all(not isinstance(v, (dict, list)) for v in obj.values()):
        width = max((len(k) for k in obj), default=0)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in obj.items())
    return json.dumps(obj, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
        status = EXIT_OK
    except _Violation as exc:
        result, status = exc.args[0], EXIT_VIOLATION
    except TheoremViolation as exc:
        print(f"polyclar: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except PolyclarError as exc:
        print(f"polyclar: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(result, int):
        return result
    text = _pretty(result) if args.pretty else json.dumps(result)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
