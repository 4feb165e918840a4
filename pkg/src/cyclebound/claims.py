"""Claim checkers and exhaustive sweeps over connected graphs.

Three claims are checked per graph, each returning a Verdict whose status
is "vacuous" (the hypotheses fail, the claim asserts nothing), "holds", or
"violated":

  thm1  if diam <= 2*rad - 2 then the circumference is at least 4*rad - 2*diam
        (in particular, such a graph always has a cycle of length >= 4)
  cor3  if the circumference is 3 then diam is 2*rad - 1 or 2*rad
  thm4  if diam <= 2*rad - 2 and the order is at most 3*rad - 2 then the
        graph contains a geodesic cycle of length 2*rad or 2*rad + 1

Every verdict recomputes radius, diameter and cycle data from the graph
itself; nothing is trusted from caches, so a "violated" verdict always
carries quantities that genuinely break the inequality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterable

from .cycles import circumference, cycle_at_least, find_geodesic_cycle
from .enumeration import (
    MAX_GENERATED_N,
    connected_canonical_forms,
    read_graph6_stream,
    worker_count,
)
from .graphs import Graph, is_connected, parse_graph6, to_graph6
from .metrics import metric_profile

VACUOUS = "vacuous"
HOLDS = "holds"
VIOLATED = "violated"

CLAIM_IDS = ("thm1", "cor3", "thm4")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim on one graph, with the recomputed quantities."""

    claim: str
    status: str
    details: dict


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate of one sweep; counts always sum to graphs_checked."""

    claim: str
    universe: str
    graphs_checked: int
    vacuous: int
    holds: int
    violated: int
    counterexamples: tuple[str, ...]
    per_order: dict[int, tuple[int, int, int]]  # n -> (vacuous, holds, violated)
    wall_time_s: float

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "universe": self.universe,
            "graphs_checked": self.graphs_checked,
            "vacuous": self.vacuous,
            "holds": self.holds,
            "violated": self.violated,
            "counterexamples": list(self.counterexamples),
            "per_order": {
                str(n): {"vacuous": v, "holds": h, "violated": x}
                for n, (v, h, x) in sorted(self.per_order.items())
            },
            "wall_time_s": self.wall_time_s,
        }


def _require_connected(g: Graph):
    if not is_connected(g):
        raise ValueError("claim checks require a connected graph")


def check_theorem1(g: Graph) -> Verdict:
    """Circumference bound c >= 4*rad - 2*diam whenever diam <= 2*rad - 2."""
    _require_connected(g)
    profile = metric_profile(g)
    r, d = profile.radius, profile.diameter
    details = {"n": g.n, "radius": r, "diameter": d}
    if g.edge_count == g.n - 1 or d > 2 * r - 2:
        return Verdict("thm1", VACUOUS, details)
    bound = 4 * r - 2 * d
    details["bound"] = bound
    rep = cycle_at_least(g, bound)
    if rep is not None:
        details["cycle"] = list(rep.cycle)
        details["cycle_length"] = rep.length
        return Verdict("thm1", HOLDS, details)
    full = circumference(g)
    details["circumference"] = 0 if full is None else full.length
    if full is not None:
        details["cycle"] = list(full.cycle)
    return Verdict("thm1", VIOLATED, details)


def check_corollary3(g: Graph) -> Verdict:
    """Graphs whose longest cycle is a triangle have diam in {2*rad-1, 2*rad}."""
    _require_connected(g)
    profile = metric_profile(g)
    r, d = profile.radius, profile.diameter
    rep = circumference(g)
    c = 0 if rep is None else rep.length
    details = {"n": g.n, "radius": r, "diameter": d, "circumference": c}
    if c != 3:
        return Verdict("cor3", VACUOUS, details)
    status = HOLDS if d in (2 * r - 1, 2 * r) else VIOLATED
    return Verdict("cor3", status, details)


def check_theorem4(g: Graph) -> Verdict:
    """Small graphs below the diameter threshold contain a geodesic cycle of
    length 2*rad or 2*rad + 1; only graphs on at most 3*rad - 2 vertices are
    in scope."""
    _require_connected(g)
    profile = metric_profile(g)
    r, d = profile.radius, profile.diameter
    details = {"n": g.n, "radius": r, "diameter": d}
    if d > 2 * r - 2 or g.n > 3 * r - 2:
        return Verdict("thm4", VACUOUS, details)
    rep = find_geodesic_cycle(g, 2 * r)
    if rep is None:
        rep = find_geodesic_cycle(g, 2 * r + 1)
    if rep is None:
        return Verdict("thm4", VIOLATED, details)
    details["cycle"] = list(rep.cycle)
    details["cycle_length"] = rep.length
    return Verdict("thm4", HOLDS, details)


CHECKERS: dict[str, Callable[[Graph], Verdict]] = {
    "thm1": check_theorem1,
    "cor3": check_corollary3,
    "thm4": check_theorem4,
}


def _check_batch(args):
    claim, batch = args
    checker = CHECKERS[claim]
    per: dict[int, list[int]] = {}
    bad: list[str] = []
    for s in batch:
        g = parse_graph6(s)
        verdict = checker(g)
        slot = per.setdefault(g.n, [0, 0, 0])
        if verdict.status == VACUOUS:
            slot[0] += 1
        elif verdict.status == HOLDS:
            slot[1] += 1
        else:
            slot[2] += 1
            bad.append(s)
    return per, bad


def _sweep(claim: str, strings: Iterable[str], workers: int):
    per_order: dict[int, list[int]] = {}
    bad: list[str] = []
    items = list(strings)
    if workers > 1 and len(items) > 256:
        chunks = [items[i::4 * workers] for i in range(4 * workers)]
        with Pool(workers) as pool:
            results = pool.imap_unordered(_check_batch, [(claim, c) for c in chunks if c])
            for per, b in results:
                for n, counts in per.items():
                    slot = per_order.setdefault(n, [0, 0, 0])
                    for i in range(3):
                        slot[i] += counts[i]
                bad.extend(b)
    else:
        per, b = _check_batch((claim, items))
        per_order = per
        bad = b
    return per_order, bad


def verify_range(
    claim: str,
    max_n: int | None = None,
    input_path=None,
    workers: int | None = None,
) -> VerificationReport:
    """Run one claim over a whole universe of connected graphs.

    The universe is either every connected isomorphism class with
    1 <= n <= max_n, or the graphs of a graph6 file.  Counterexamples are
    reported as sorted graph6 strings; the report is deterministic for a
    fixed universe apart from the wall time.
    """
    if claim not in CHECKERS:
        raise ValueError(f"unknown claim {claim!r}, expected one of {CLAIM_IDS}")
    if (max_n is None) == (input_path is None):
        raise ValueError("exactly one of max_n and input_path must be given")
    if workers is None:
        workers = worker_count()
    start = time.perf_counter()
    per_order: dict[int, tuple[int, int, int]] = {}
    bad: list[str] = []
    if max_n is not None:
        if not 1 <= max_n <= MAX_GENERATED_N:
            raise ValueError(f"max_n must be in 1..{MAX_GENERATED_N}, got {max_n}")
        universe = f"generated connected graphs on 1..{max_n} vertices"
        for n in range(1, max_n + 1):
            per, b = _sweep(claim, connected_canonical_forms(n), workers)
            for order, counts in per.items():
                per_order[order] = tuple(counts)
            bad.extend(b)
    else:
        universe = f"graph6 file {input_path}"
        strings = [to_graph6(g) for g in read_graph6_stream(input_path)]
        per, b = _sweep(claim, strings, workers)
        per_order = {n: tuple(counts) for n, counts in per.items()}
        bad.extend(b)
    vac = sum(v for v, _, _ in per_order.values())
    hold = sum(h for _, h, _ in per_order.values())
    viol = sum(x for _, _, x in per_order.values())
    return VerificationReport(
        claim=claim,
        universe=universe,
        graphs_checked=vac + hold + viol,
        vacuous=vac,
        holds=hold,
        violated=viol,
        counterexamples=tuple(sorted(bad)),
        per_order=per_order,
        wall_time_s=round(time.perf_counter() - start, 3),
    )


@dataclass(frozen=True)
class MinimalOrderResult:
    """Smallest order admitting the requested radius and diameter, if found."""

    radius: int
    diameter: int
    cap: int
    order: int | None
    witnesses: tuple[Graph, ...]

    @property
    def found(self) -> bool:
        return self.order is not None

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "diameter": self.diameter,
            "cap": self.cap,
            "status": "found" if self.found else "undetermined",
            "order": self.order,
            "witnesses": [to_graph6(g) for g in self.witnesses],
        }


def minimal_order_search(r: int, d: int, cap: int = 9) -> MinimalOrderResult:
    """All isomorphism classes of minimal order with radius r and diameter d.

    Scans orders upward through the generated universe.  When the cap is
    exhausted the result says so explicitly instead of guessing.
    """
    if not 0 <= r <= d <= 2 * r:
        raise ValueError(f"need 0 <= r <= d <= 2r, got r={r}, d={d}")
    if not 1 <= cap <= MAX_GENERATED_N:
        raise ValueError(f"cap must be in 1..{MAX_GENERATED_N}, got {cap}")
    for n in range(1, cap + 1):
        hits = []
        for s in connected_canonical_forms(n):
            g = parse_graph6(s)
            profile = metric_profile(g)
            if profile.radius == r and profile.diameter == d:
                hits.append(g)
        if hits:
            return MinimalOrderResult(r, d, cap, n, tuple(hits))
    return MinimalOrderResult(r, d, cap, None, ())
