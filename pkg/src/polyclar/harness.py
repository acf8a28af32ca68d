"""Run every theorem check over all small polyominoes and report.

Each graph yields one JSON-ready dict (see README for the schema).  Check
outcomes are ``"holds"``, ``"violated"`` or ``"skipped(<reason>)"``.
"""
from __future__ import annotations

import csv
import io
import json
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .clar_ip import build_clar_ip, solve_ip, solve_lp_exact
from .counting import count_perfect_matchings
from .errors import TooLarge
from .forcing import forcing_number, max_forcing_via_clar
from .generate import GeneratorConfig, generate_polyominoes
from .grid import PolyominoGraph, build_from_cells
from .matching import enumerate_perfect_matchings, has_perfect_matching
from .resonance import maximal_alternating_sets, maximum_resonant_sets, verify_unique_after_deletion
from .structure import classify_edges, interior_uniqueness, is_weakly_elementary

HOLDS = "holds"
VIOLATED = "violated"

# outcomes that decide the exit status; the LP probe is informational.
#   counting                    profile DP count == number of enumerated matchings
#   forcing_minimax             f(G, M) == c(M) for every perfect matching M
#   maximum_resonant_unique     G - V(K) has one perfect matching, K any maximum resonant set
#   maximal_alternating_unique  same for every maximal alternating set K
#   clar_equals_forcing         both Clar backends and both F(G) routes agree
#   internal_resonance          a maximum resonant set of internal squares leaves
#                               G - V(K) - external vertices without a perfect matching
#   interior_uniqueness         the uniqueness property inside every nice cycle
#   weakly_elementary           G is weakly elementary when interior_uniqueness holds
THEOREM_CHECKS = (
    "counting",
    "forcing_minimax",
    "maximum_resonant_unique",
    "maximal_alternating_unique",
    "clar_equals_forcing",
    "internal_resonance",
    "interior_uniqueness",
    "weakly_elementary",
)
PROBES = ("lp_integrality",)
ALL_CHECKS = THEOREM_CHECKS + PROBES

DEFAULT_N_MAX = 7
HEAVY_N_MAX = 8


def skipped(reason: str) -> str:
    return f"skipped({reason})"


def _verdict(ok: bool) -> str:
    return HOLDS if ok else VIOLATED


@dataclass(frozen=True)
class BatteryConfig:
    n_max: int = DEFAULT_N_MAX
    generator: GeneratorConfig = GeneratorConfig()
    workers: int = 1
    max_vertices: Optional[int] = None
    timing: bool = True


def verify_graph(g: PolyominoGraph, graph_id: str, max_vertices: Optional[int] = None) -> dict:
    """Compute every invariant of ``g`` and evaluate every check."""
    t0 = time.perf_counter()
    checks = {name: None for name in ALL_CHECKS}
    errors: list[str] = []
    report = {
        "id": graph_id,
        "n_cells": len(g.cells),
        "cells": g.to_json()["cells"],
        "mode": g.mode,
        "n_vertices": g.n_vertices,
        "two_connected": g.is_two_connected,
        "perfect_matchings": None,
        "clar": {"exhaustive": None, "ip": None},
        "max_forcing": {"brute_force": None, "via_clar": None},
        "lp_optimum": None,
        "elementary": None,
        "matchings": [],
        "checks": checks,
        "errors": errors,
    }

    def run(name, fn):
        try:
            checks[name] = fn()
        except TooLarge as exc:
            checks[name] = skipped(f"size-guard: {exc}")
        except Exception as exc:  # a crash inside a check is a finding, not an abort
            checks[name] = VIOLATED
            errors.append(f"{name}: {type(exc).__name__}: {exc}")
            errors.append(traceback.format_exc(limit=3).strip().splitlines()[-1])

    try:
        matchings = enumerate_perfect_matchings(g, max_vertices)
    except TooLarge as exc:
        for name in ALL_CHECKS:
            checks[name] = skipped(f"size-guard: {exc}")
        return _finish(report, t0)

    def counting():
        n = count_perfect_matchings(g)
        report["perfect_matchings"] = str(n)
        return _verdict(n == len(matchings))

    run("counting", counting)
    if not matchings:
        for name in ALL_CHECKS[1:]:
            checks[name] = skipped("no-perfect-matching")
        return _finish(report, t0)
    if not g.is_polyomino_graph:
        for name in ALL_CHECKS[1:]:
            checks[name] = skipped("non-square-face")
        return _finish(report, t0)

    forcing = {}

    def forcing_minimax():
        ok = True
        for m in matchings:
            r = forcing_number(g, m, all_sets=False, max_vertices=max_vertices)
            forcing[m.key] = r.forcing_number
            report["matchings"].append([r.forcing_number, r.c_value])
            ok &= r.minimax_holds
        return _verdict(ok)

    run("forcing_minimax", forcing_minimax)

    state = {}

    def maximum_resonant_unique():
        value, sets = maximum_resonant_sets(g)
        state["clar"], state["max_sets"] = value, sets
        report["clar"]["exhaustive"] = value
        return _verdict(all(verify_unique_after_deletion(g, k) for k in sets))

    run("maximum_resonant_unique", maximum_resonant_unique)

    def maximal_alternating_unique():
        sets = maximal_alternating_sets(g, max_vertices)
        return _verdict(all(verify_unique_after_deletion(g, k) for k in sets))

    run("maximal_alternating_unique", maximal_alternating_unique)

    def clar_equals_forcing():
        ip_val = solve_ip(build_clar_ip(g), g).optimum
        report["clar"]["ip"] = ip_val
        brute = max(forcing.values()) if len(forcing) == len(matchings) else None
        if brute is None:
            brute = max(forcing_number(g, m, all_sets=False).forcing_number for m in matchings)
        report["max_forcing"]["brute_force"] = brute
        via = max_forcing_via_clar(g)
        report["max_forcing"]["via_clar"] = via
        exhaustive = report["clar"]["exhaustive"]
        if exhaustive is None:
            exhaustive = maximum_resonant_sets(g)[0]
        return _verdict(exhaustive == ip_val == brute == via)

    run("clar_equals_forcing", clar_equals_forcing)

    def internal_resonance():
        if not g.is_two_connected:
            return skipped("not-2-connected")
        sets = state.get("max_sets")
        if sets is None:
            sets = maximum_resonant_sets(g)[1]
        ext = g.external_vertices
        for k in sets:
            if k <= g.internal_squares:
                rest = g.minus(g.vertices_of_squares(k) | ext)
                if not rest.vertices or has_perfect_matching(rest):
                    return VIOLATED
        return HOLDS

    run("internal_resonance", internal_resonance)

    def interior_and_weak():
        check = interior_uniqueness(g, max_vertices)
        checks["interior_uniqueness"] = _verdict(check.holds)
        if not check.holds:
            return skipped("hypothesis-fails")
        return _verdict(is_weakly_elementary(g, max_vertices))

    run("weakly_elementary", interior_and_weak)
    if checks["interior_uniqueness"] is None:
        checks["interior_uniqueness"] = checks["weakly_elementary"]

    def lp_integrality():
        elementary = not classify_edges(g).forbidden
        report["elementary"] = elementary
        ip = build_clar_ip(g)
        lp = solve_lp_exact(ip)
        report["lp_optimum"] = str(lp.objective)
        if not elementary:
            return skipped("not-elementary")
        if not g.is_two_connected:
            return skipped("not-2-connected")
        ip_val = report["clar"]["ip"]
        if ip_val is None:
            ip_val = solve_ip(ip, g, root=lp).optimum
        return _verdict(lp.objective == ip_val)

    run("lp_integrality", lp_integrality)
    return _finish(report, t0)


def _finish(report: dict, t0: float) -> dict:
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report


def _verify_job(args) -> dict:
    cells, graph_id, mode, max_vertices = args
    return verify_graph(build_from_cells(cells, mode), graph_id, max_vertices)


def battery_jobs(cfg: BatteryConfig) -> list[tuple]:
    jobs = []
    for n in range(1, cfg.n_max + 1):
        for i, cells in enumerate(generate_polyominoes(n, cfg.generator)):
            jobs.append((cells, f"n{n}-{i:05d}", cfg.generator.connectivity_mode, cfg.max_vertices))
    return jobs


def run_battery(n_max: int = DEFAULT_N_MAX, cfg: Optional[BatteryConfig] = None) -> list[dict]:
    """Verify every fixed polyomino with up to ``n_max`` cells.

    Reports come back in generation order whatever the worker count.
    """
    cfg = cfg or BatteryConfig()
    cfg = replace(cfg, n_max=n_max, generator=replace(cfg.generator, max_cells=n_max))
    jobs = battery_jobs(cfg)
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            reports = list(pool.map(_verify_job, jobs, chunksize=16))
    else:
        reports = [_verify_job(job) for job in jobs]
    if not cfg.timing:
        for r in reports:
            r.pop("timing", None)
    return reports


def violations(reports: Iterable[dict], names: Iterable[str] = THEOREM_CHECKS) -> list[tuple[str, str]]:
    names = tuple(names)
    return [(r["id"], name) for r in reports for name in names if r["checks"][name] == VIOLATED]


def summarize(reports: list[dict]) -> dict:
    out = {"graphs": len(reports), "with_perfect_matching": 0, "checks": {}}
    for r in reports:
        if r["perfect_matchings"] not in (None, "0"):
            out["with_perfect_matching"] += 1
    for name in ALL_CHECKS:
        tally = {"holds": 0, "violated": 0, "skipped": 0}
        for r in reports:
            v = r["checks"][name]
            tally["skipped" if v.startswith("skipped") else v] += 1
        out["checks"][name] = tally
    out["theorem_violations"] = len(violations(reports))
    return out


def to_jsonl(reports: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=False, separators=(",", ":")) + "\n" for r in reports)


CSV_COLUMNS = (
    "id",
    "n_cells",
    "n_vertices",
    "perfect_matchings",
    "clar_exhaustive",
    "clar_ip",
    "F_brute_force",
    "F_via_clar",
) + ALL_CHECKS


def to_csv(reports: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(
            [
                r["id"],
                r["n_cells"],
                r["n_vertices"],
                r["perfect_matchings"],
                r["clar"]["exhaustive"],
                r["clar"]["ip"],
                r["max_forcing"]["brute_force"],
                r["max_forcing"]["via_clar"],
            ]
            + [r["checks"][name] for name in ALL_CHECKS]
        )
    return buf.getvalue()
