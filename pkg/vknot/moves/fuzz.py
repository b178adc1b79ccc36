"""
Invariance fuzzing.

A random diagram is rewritten by random diagram moves while its intersection
graph is rewritten independently by random omega moves. After every step the
writhe polynomial of both sides is compared against the starting value.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..diagram import random_diagram
from ..errors import S2ConstraintUnsatisfiable
from ..graph import (
    ADD_KINDS,
    DEFAULT_MAX_VERTICES,
    OmegaKind,
    apply_omega,
    build_intersection_graph,
    graphs_isomorphic,
    random_omega_site,
)
from ..invariants import graph_writhe_polynomial, writhe_polynomial
from ..utils import make_rng, random_permutation
from .engine import apply_move, random_move
from .shell import s2_new_chords, s2_report
from .sites import MoveKind
from .trace import MoveTrace

logger = logging.getLogger(__name__)

EXTRA_CHORDS = 4
EXTRA_VERTICES = 8


@dataclass
class FuzzFailure:
    step: int
    check: str
    detail: str

    def to_dict(self):
        return {"step": self.step, "check": self.check, "detail": self.detail}


@dataclass
class FuzzReport:
    """
    Outcome of one fuzz run.

    trace replays the run: its diagram steps rebuild the final diagram and its
    omega steps rebuild the final graph.
    """
    n: int
    moves: int
    seed: int
    trace: MoveTrace
    failures: list = field(default_factory=list)
    s2_checks: list = field(default_factory=list)
    s1_checks: int = 0
    kinds: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def fail(self, step, check, detail):
        logger.debug("seed %s step %d: %s failed (%s)", self.seed, step, check, detail)
        self.failures.append(FuzzFailure(step, check, detail))

    def to_dict(self):
        return {
            "n": self.n,
            "moves": self.moves,
            "seed": self.seed,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "s1_checks": self.s1_checks,
            "s2_checks": len(self.s2_checks),
            "kinds": dict(sorted(self.kinds.items())),
            "trace": self.trace.to_dict(),
        }


def _graph_step(g, rng, vertex_cap):
    kinds = list(OmegaKind)
    for index in random_permutation(len(kinds), rng):
        kind = kinds[index]
        if kind in ADD_KINDS and len(g) >= vertex_cap:
            continue
        site = random_omega_site(g, rng, kind)
        if site is not None:
            return site
    return None


def _check_s1(report, step, before, after):
    g_before, g_after = build_intersection_graph(before), build_intersection_graph(after)
    report.s1_checks += 1
    if g_before == g_after:
        return
    if len(g_before) > DEFAULT_MAX_VERTICES or not graphs_isomorphic(g_before, g_after):
        report.fail(step, "S1 graph", f"{g_before!r} vs {g_after!r}")


def _check_s2(report, step, before, after, site):
    if site.remove:
        return
    checked = s2_report(before, after, *s2_new_chords(before, after, site))
    report.s2_checks.append(checked)
    if not checked["ok"]:
        report.fail(step, "S2 constraints", str(checked))


def fuzz_invariance(n, moves, seed, max_chords=None):
    """
    Fuzz the move engines on one random diagram.

    Args:
        n: Chord count of the start diagram
        moves: Number of steps; each step applies one diagram move and one omega move
        seed: Seed for the start diagram and every random choice
        max_chords: Chord cap for growing moves, n + 4 by default

    Returns:
        FuzzReport: Failures, S2 constraint records and the replayable trace
    """
    if n < 0 or moves < 0:
        raise ValueError("n and moves must be non-negative")
    rng = make_rng(seed)
    d = random_diagram(n, rng)
    g = build_intersection_graph(d)
    if max_chords is None:
        max_chords = n + EXTRA_CHORDS
    vertex_cap = 2 * max_chords + EXTRA_VERTICES
    report = FuzzReport(n, moves, seed, MoveTrace.starting_at(d, seed))

    w0 = writhe_polynomial(d)
    if w0 != graph_writhe_polynomial(g):
        report.fail(0, "diagram/graph", f"{w0} vs {graph_writhe_polynomial(g)}")

    for step in range(1, moves + 1):
        site = random_move(d, rng, max_chords=max_chords)
        if site is not None:
            try:
                after = apply_move(d, site)
            except S2ConstraintUnsatisfiable as exc:
                report.fail(step, "S2 solvable", str(exc))
                after = None
            if after is not None:
                report.trace.record(site)
                report.kinds[site.kind.value] = report.kinds.get(site.kind.value, 0) + 1
                if site.kind is MoveKind.S1:
                    _check_s1(report, step, d, after)
                elif site.kind is MoveKind.S2:
                    _check_s2(report, step, d, after, site)
                d = after
                w = writhe_polynomial(d)
                if w != w0:
                    report.fail(step, f"{site.kind.value} invariance", f"{w0} -> {w}")
                wg = graph_writhe_polynomial(build_intersection_graph(d))
                if w != wg:
                    report.fail(step, "diagram/graph", f"{w} vs {wg}")

        omega = _graph_step(g, rng, vertex_cap)
        if omega is not None:
            g = apply_omega(g, omega)
            report.trace.record(omega)
            report.kinds[omega.kind.value] = report.kinds.get(omega.kind.value, 0) + 1
            wg = graph_writhe_polynomial(g)
            if wg != w0:
                report.fail(step, f"{omega.kind.value} invariance", f"{w0} -> {wg}")

    logger.info("fuzz n=%d moves=%d seed=%s: %d failures", n, moves, seed, len(report.failures))
    return report


def _fuzz_one(args):
    return fuzz_invariance(*args)


def run_fuzz_campaign(n, moves, seed, count=1, workers=1):
    """
    Run fuzz_invariance for the seeds seed, seed + 1, ..., seed + count - 1.

    Args:
        workers: Number of worker processes; 1 runs in the calling process

    Returns:
        list: FuzzReport instances in seed order
    """
    jobs = [(n, moves, seed + i) for i in range(count)]
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_fuzz_one, jobs))
    else:
        reports = [_fuzz_one(job) for job in jobs]
    reports.sort(key=lambda r: r.seed)
    failed = sum(not r.passed for r in reports)
    logger.info("fuzz campaign: %d runs, %d failed", len(reports), failed)
    return reports
