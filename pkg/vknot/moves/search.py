"""
Bounded breadth-first search for a move sequence between two diagrams.

Diagrams are compared through their canonical form: the lexicographically
smallest rotation of the endpoint word after first-appearance relabeling.
"""
import logging
from collections import deque

from ..errors import S2ConstraintUnsatisfiable, SizeLimit
from ..invariants import writhe_polynomial
from .engine import apply_move, enumerate_moves
from .sites import MoveKind
from .trace import MoveTrace

logger = logging.getLogger(__name__)

DEFAULT_DEPTH_CAP = 6
DEFAULT_MAX_NODES = 50000
DEFAULT_MAX_CHORDS = 6


def _rotation_key(d, r):
    size = d.size
    labels = {}
    key = []
    for k in range(size):
        ep = d.endpoints[(r + k) % size]
        label = labels.setdefault(ep.chord, len(labels) + 1)
        key.append((label, ep.role.value, d.sign(ep.chord)))
    return tuple(key)


def canonical_form(d):
    """
    Canonical word of a diagram up to rotation and chord relabeling.

    Returns:
        tuple: (label, role, sign) triples; () for the empty diagram
    """
    if d.size == 0:
        return ()
    return min(_rotation_key(d, r) for r in range(d.size))


def bounded_equivalence_search(
    d1,
    d2,
    depth,
    depth_cap=DEFAULT_DEPTH_CAP,
    max_nodes=DEFAULT_MAX_NODES,
    max_chords=DEFAULT_MAX_CHORDS,
):
    """
    Look for a sequence of at most `depth` moves taking d1 to d2.

    Intermediate diagrams may carry up to two chords more than the larger
    input. The search stops early, returning None, once max_nodes diagrams
    have been visited.

    Args:
        d1: Start diagram
        d2: Target diagram
        depth: Maximum number of moves
        depth_cap: Upper bound accepted for depth
        max_nodes: Visited-diagram budget
        max_chords: Upper bound on the chord count of either input

    Returns:
        MoveTrace or None: Trace from d1 to a diagram with the canonical form of d2

    Raises:
        SizeLimit: If depth exceeds depth_cap or an input exceeds max_chords chords
    """
    if depth < 0 or depth > depth_cap:
        raise SizeLimit(f"depth {depth} outside 0..{depth_cap}")
    if d1.n > max_chords or d2.n > max_chords:
        raise SizeLimit(f"search is limited to diagrams with at most {max_chords} chords")
    if writhe_polynomial(d1) != writhe_polynomial(d2):
        logger.debug("writhe polynomials differ, no search")
        return None

    target = canonical_form(d2)
    chord_bound = max(d1.n, d2.n) + 2
    start = canonical_form(d1)
    parents = {start: None}
    queue = deque([(d1, start, 0)])
    while queue:
        d, key, level = queue.popleft()
        if key == target:
            return _build_trace(d1, parents, key)
        if level == depth:
            continue
        for kind in MoveKind:
            for site in enumerate_moves(d, kind):
                try:
                    nxt = apply_move(d, site)
                except S2ConstraintUnsatisfiable:
                    continue
                if nxt.n > chord_bound:
                    continue
                nxt_key = canonical_form(nxt)
                if nxt_key in parents:
                    continue
                parents[nxt_key] = (key, site)
                if len(parents) >= max_nodes:
                    logger.warning("search budget of %d diagrams exhausted", max_nodes)
                    return _build_trace(d1, parents, nxt_key) if nxt_key == target else None
                queue.append((nxt, nxt_key, level + 1))
    return None


def _build_trace(d1, parents, key):
    sites = []
    while parents[key] is not None:
        key, site = parents[key]
        sites.append(site)
    trace = MoveTrace.starting_at(d1)
    for site in reversed(sites):
        trace.record(site)
    return trace
